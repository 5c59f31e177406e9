#include "discarr/permtype.hpp"

#include <algorithm>
#include <numeric>
#include <cctype>
#include <functional>
#include <queue>

namespace discarr {

Perm::Perm() : img_{1, 2, 3, 4, 5, 6} {}

Perm::Perm(std::array<int, 6> images) : img_(images) {
  std::array<int, 6> s = images;
  std::sort(s.begin(), s.end());
  if (s != std::array<int, 6>{1, 2, 3, 4, 5, 6})
    throw Error(ErrorCode::kInvalidArgument, "not a permutation of [6]");
}

Perm Perm::transposition(int i, int j) { return from_cycles({{i, j}}); }

Perm Perm::from_cycles(const std::vector<std::vector<int>>& cycles) {
  std::array<int, 6> img{1, 2, 3, 4, 5, 6};
  std::array<bool, 6> used{};
  for (const auto& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int x = c[i];
      if (x < 1 || x > 6 || used[static_cast<std::size_t>(x - 1)])
        throw Error(ErrorCode::kInvalidArgument, "cycles must be disjoint and inside [6]");
      used[static_cast<std::size_t>(x - 1)] = true;
      img[static_cast<std::size_t>(x - 1)] = c[(i + 1) % c.size()];
    }
  return Perm(img);
}

Perm Perm::from_matching(const IndexMatching& m) {
  std::vector<std::vector<int>> cycles;
  for (const auto& p : m.pairs()) cycles.push_back({p[0], p[1]});
  return from_cycles(cycles);
}

Perm Perm::operator*(const Perm& o) const {
  std::array<int, 6> r{};
  for (int x = 1; x <= 6; ++x) r[static_cast<std::size_t>(x - 1)] = (*this)(o(x));
  return Perm(r);
}

Perm Perm::inverse() const {
  std::array<int, 6> r{};
  for (int x = 1; x <= 6; ++x) r[static_cast<std::size_t>((*this)(x) - 1)] = x;
  return Perm(r);
}

bool Perm::is_identity() const { return *this == Perm(); }

std::vector<int> Perm::cycle_type() const {
  std::vector<int> out;
  for (const auto& orbit : o_map(*this)) out.push_back(static_cast<int>(orbit.size()));
  std::sort(out.rbegin(), out.rend());
  return out;
}

int Perm::index() const {
  int idx = 0;
  for (std::size_t i = 0; i < 6; ++i) {
    int smaller = 0;
    for (std::size_t j = i + 1; j < 6; ++j)
      if (img_[j] < img_[i]) ++smaller;
    int f = 1;
    for (std::size_t t = 1; t < 6 - i; ++t) f *= static_cast<int>(t);
    idx += smaller * f;
  }
  return idx;
}

Perm Perm::from_index(int index) {
  if (index < 0 || index >= 720) throw Error(ErrorCode::kInvalidArgument, "permutation index out of range");
  std::vector<int> pool{1, 2, 3, 4, 5, 6};
  std::array<int, 6> img{};
  for (std::size_t i = 0; i < 6; ++i) {
    int f = 1;
    for (std::size_t t = 1; t < 6 - i; ++t) f *= static_cast<int>(t);
    const auto pos = static_cast<std::size_t>(index / f);
    index %= f;
    img[i] = pool[pos];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return Perm(img);
}

std::string Perm::to_string() const {
  std::string out;
  for (const auto& orbit : o_map(*this)) {
    if (orbit.size() == 1) continue;
    out += '(';
    int x = orbit.front();
    do {
      out += std::to_string(x);
      x = (*this)(x);
    } while (x != orbit.front());
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

const std::array<Perm, 720>& phi_table() {
  static const std::array<Perm, 720> table = [] {
    const std::array<Perm, 5> gens{Perm::transposition(1, 2), Perm::transposition(2, 3), Perm::transposition(3, 4),
                                   Perm::transposition(4, 5), Perm::transposition(5, 6)};
    const std::array<Perm, 5> images{
        Perm::from_cycles({{1, 5}, {2, 6}, {3, 4}}), Perm::from_cycles({{1, 2}, {3, 5}, {4, 6}}),
        Perm::from_cycles({{1, 5}, {2, 4}, {3, 6}}), Perm::from_cycles({{1, 4}, {2, 6}, {3, 5}}),
        Perm::from_cycles({{1, 5}, {2, 3}, {4, 6}})};
    std::array<Perm, 720> t{};
    std::array<bool, 720> seen{};
    std::queue<Perm> todo;
    seen[static_cast<std::size_t>(Perm().index())] = true;
    todo.push(Perm());
    while (!todo.empty()) {
      const Perm g = todo.front();
      todo.pop();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const Perm h = g * gens[i];
        const auto hi = static_cast<std::size_t>(h.index());
        if (seen[hi]) continue;
        seen[hi] = true;
        t[hi] = t[static_cast<std::size_t>(g.index())] * images[i];
        todo.push(h);
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

Perm phi(const Perm& p) { return phi_table()[static_cast<std::size_t>(p.index())]; }

int edge_index(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 6 || i == j) throw Error(ErrorCode::kInvalidArgument, "edge needs two distinct vertices of [6]");
  int idx = 0;
  for (int a = 1; a < i; ++a) idx += 6 - a;
  return idx + (j - i - 1);
}

std::array<int, 2> edge_vertices(int edge) {
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j)
      if (edge_index(i, j) == edge) return {i, j};
  throw Error(ErrorCode::kInvalidArgument, "edge index out of range");
}

Perm edge_label(int i, int j) {
  if (i == j) throw Error(ErrorCode::kInvalidArgument, "edge needs two distinct vertices");
  return phi(Perm::transposition(i, j));
}

std::array<int, 2> matching_to_edge(const IndexMatching& m) {
  if (m.support() != IndexSet{1, 2, 3, 4, 5, 6})
    throw Error(ErrorCode::kNotAMatchingLabel, "matching " + m.to_string() + " does not cover [6]");
  const Perm s = Perm::from_matching(m);
  for (int e = 0; e < 15; ++e) {
    const auto v = edge_vertices(e);
    if (edge_label(v[0], v[1]) == s) return v;
  }
  throw Error(ErrorCode::kNotAMatchingLabel, "matching " + m.to_string() + " labels no edge");
}

std::vector<std::vector<int>> o_map(const Perm& s) {
  std::vector<std::vector<int>> out;
  std::array<bool, 6> seen{};
  for (int x = 1; x <= 6; ++x) {
    if (seen[static_cast<std::size_t>(x - 1)]) continue;
    std::vector<int> orbit;
    for (int y = x; !seen[static_cast<std::size_t>(y - 1)]; y = s(y)) {
      seen[static_cast<std::size_t>(y - 1)] = true;
      orbit.push_back(y);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

VertexPartition::VertexPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
  std::vector<int> all;
  for (auto& b : blocks_) {
    if (b.empty()) throw Error(ErrorCode::kInvalidArgument, "empty block");
    std::sort(b.begin(), b.end());
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  if (all != std::vector<int>{1, 2, 3, 4, 5, 6})
    throw Error(ErrorCode::kInvalidArgument, "blocks must partition [6]");
  std::sort(blocks_.begin(), blocks_.end());
}

std::string VertexPartition::to_string() const {
  std::string out;
  for (const auto& b : blocks_) {
    out += '{';
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
    out += '}';
  }
  return out;
}

PartitionType::PartitionType(std::map<int, int> parts) : parts_(std::move(parts)) {
  int total = 0;
  for (auto it = parts_.begin(); it != parts_.end();) {
    if (it->first < 1 || it->second < 0) throw Error(ErrorCode::kInvalidArgument, "bad partition part");
    total += it->first * it->second;
    it = it->second == 0 ? parts_.erase(it) : std::next(it);
  }
  if (total != 6) throw Error(ErrorCode::kInvalidArgument, "partition type must sum to 6");
}

PartitionType PartitionType::of(const VertexPartition& v) {
  std::map<int, int> parts;
  for (const auto& b : v.blocks()) ++parts[static_cast<int>(b.size())];
  return PartitionType(parts);
}

PartitionType PartitionType::parse(const std::string& s) {
  std::map<int, int> parts;
  std::size_t i = 0;
  auto sep = [](char c) { return c == ' ' || c == '_' || c == ',' || c == '.' || c == '-'; };
  while (i < s.size()) {
    if (sep(s[i])) {
      ++i;
      continue;
    }
    if (i + 2 >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])) || s[i + 1] != '^' ||
        !std::isdigit(static_cast<unsigned char>(s[i + 2])))
      throw ParseError(i, "expected d^a in partition type '" + s + "'");
    parts[s[i] - '0'] += s[i + 2] - '0';
    i += 3;
  }
  if (parts.empty()) throw ParseError(0, "empty partition type");
  try {
    return PartitionType(parts);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

const std::vector<PartitionType>& PartitionType::all() {
  static const std::vector<PartitionType> types{
      PartitionType(std::map<int, int>{{1, 6}}),         PartitionType(std::map<int, int>{{1, 4}, {2, 1}}), PartitionType(std::map<int, int>{{1, 3}, {3, 1}}),
      PartitionType(std::map<int, int>{{1, 2}, {2, 2}}), PartitionType(std::map<int, int>{{1, 2}, {4, 1}}), PartitionType(std::map<int, int>{{1, 1}, {2, 1}, {3, 1}}),
      PartitionType(std::map<int, int>{{2, 3}}),         PartitionType(std::map<int, int>{{1, 1}, {5, 1}}), PartitionType(std::map<int, int>{{2, 1}, {4, 1}}),
      PartitionType(std::map<int, int>{{3, 2}}),         PartitionType(std::map<int, int>{{6, 1}})};
  return types;
}

std::string PartitionType::to_string() const {
  std::string out;
  for (const auto& [d, a] : parts_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(d) + "^" + std::to_string(a);
  }
  return out;
}

VertexPartition PartitionType::representative() const {
  std::vector<std::vector<int>> blocks;
  int next = 1;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
    for (int c = 0; c < it->second; ++c) {
      std::vector<int> b;
      for (int i = 0; i < it->first; ++i) b.push_back(next++);
      blocks.push_back(std::move(b));
    }
  return VertexPartition(blocks);
}

int m_of_type(const PartitionType& nu) {
  int m = 0;
  for (const auto& [d, a] : nu.parts()) m += a * d * (d - 1) / 2;
  return m;
}

EdgeMask induced_edges(const VertexPartition& v) {
  EdgeMask mask = 0;
  for (const auto& b : v.blocks())
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) mask |= static_cast<EdgeMask>(1U << edge_index(b[i], b[j]));
  return mask;
}

VertexPartition partition_from_edges(EdgeMask edges) {
  std::array<int, 7> parent{0, 1, 2, 3, 4, 5, 6};
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (int e = 0; e < 15; ++e) {
    if (!(edges >> e & 1U)) continue;
    const auto v = edge_vertices(e);
    parent[static_cast<std::size_t>(find(v[0]))] = find(v[1]);
  }
  std::map<int, std::vector<int>> comps;
  for (int x = 1; x <= 6; ++x) comps[find(x)].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& [root, b] : comps) blocks.push_back(std::move(b));
  return VertexPartition(blocks);
}

std::vector<VertexPartition> all_set_partitions() {
  // Restricted growth strings a_1..a_6 with a_1 = 0, a_i <= 1 + max(a_<i).
  std::vector<VertexPartition> out;
  std::array<int, 6> a{};
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int mx) {
    if (i == 6) {
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(mx + 1));
      for (std::size_t j = 0; j < 6; ++j) blocks[static_cast<std::size_t>(a[j])].push_back(static_cast<int>(j + 1));
      out.emplace_back(blocks);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      a[i] = v;
      rec(i + 1, std::max(mx, v));
    }
  };
  rec(1, 0);
  return out;
}

TypeReport arrangement_type(const Arrangement& a) {
  if (a.n() != 6) throw Error(ErrorCode::kInvalidArgument, "classification is defined for six hyperplanes");
  TypeReport r;
  r.k = a.k();
  if (a.k() == 2) {
    for (const auto& inv : find_involutions(a)) r.matchings.push_back(inv.matching);
    r.m_a = quadral_points(a).size();
  } else if (a.k() == 3) {
    r.matchings = good6_points(a);
    r.m_a = r.matchings.size();
  } else {
    throw Error(ErrorCode::kInvalidArgument, "classification is defined for k = 2 and k = 3");
  }
  for (const auto& m : r.matchings) {
    const auto e = matching_to_edge(m);
    r.edges |= static_cast<EdgeMask>(1U << edge_index(e[0], e[1]));
  }
  r.partition = partition_from_edges(r.edges);
  if (induced_edges(r.partition) != r.edges)
    throw Error(ErrorCode::kClosureViolation,
                "detected edges are not induced by their components " + r.partition.to_string());
  r.type = PartitionType::of(r.partition);
  r.m_nu = m_of_type(r.type);
  const std::size_t expect = static_cast<std::size_t>(a.k() == 2 ? 2 * r.m_nu : r.m_nu);
  r.count_consistent = r.m_a == expect;
  return r;
}

bool upper_bound_check(const TypeReport& r) {
  if (r.k != 2) return true;
  return r.m_a <= 20 && !(r.type == PartitionType(std::map<int, int>{{6, 1}}));
}

}  // namespace discarr
