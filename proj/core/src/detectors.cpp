#include "discarr/detectors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace discarr {

std::string format_indices(const IndexSet& s) {
  const bool small = std::all_of(s.begin(), s.end(), [](int i) { return i < 10; });
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!small && i > 0) out += '-';
    out += std::to_string(s[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// IndexMatching

IndexMatching::IndexMatching(std::array<Pair, 3> pairs) : pairs_(pairs) {
  for (auto& p : pairs_)
    if (p[0] > p[1]) std::swap(p[0], p[1]);
  std::sort(pairs_.begin(), pairs_.end());
  IndexSet s = support();
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error(ErrorCode::kInvalidArgument, "matching pairs must be disjoint");
}

IndexSet IndexMatching::support() const {
  IndexSet s;
  for (const auto& p : pairs_) s.insert(s.end(), p.begin(), p.end());
  std::sort(s.begin(), s.end());
  return s;
}

int IndexMatching::partner(int i) const {
  for (const auto& p : pairs_) {
    if (p[0] == i) return p[1];
    if (p[1] == i) return p[0];
  }
  throw Error(ErrorCode::kInvalidArgument, "index " + std::to_string(i) + " not covered by matching");
}

bool IndexMatching::shares_pair(const IndexMatching& o) const {
  for (const auto& p : pairs_)
    if (std::find(o.pairs_.begin(), o.pairs_.end(), p) != o.pairs_.end()) return true;
  return false;
}

IndexMatching IndexMatching::conjugate_by(const IndexMatching& s1) const {
  if (support() != s1.support()) throw Error(ErrorCode::kInvalidArgument, "matchings on different supports");
  std::array<Pair, 3> out{};
  std::size_t n = 0;
  IndexSet done;
  for (int x : support()) {
    if (std::find(done.begin(), done.end(), x) != done.end()) continue;
    const int y = s1.partner(partner(s1.partner(x)));
    out[n++] = {x, y};
    done.push_back(x);
    done.push_back(y);
  }
  return IndexMatching(out);
}

std::string IndexMatching::to_string() const {
  bool wide = false;
  for (const auto& p : pairs_) wide = wide || p[1] >= 10;
  std::string out;
  for (const auto& p : pairs_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p[0]) + (wide ? "-" : "") + std::to_string(p[1]);
  }
  return out;
}

std::vector<IndexMatching> matchings_of(const IndexSet& six) {
  if (six.size() != 6) throw Error(ErrorCode::kBadSubsetSize, "matchings need six indices");
  std::vector<IndexMatching> out;
  const int a = six[0];
  for (std::size_t i = 1; i < 6; ++i) {
    IndexSet rest;
    for (std::size_t j = 1; j < 6; ++j)
      if (j != i) rest.push_back(six[j]);
    const int b = rest[0];
    for (std::size_t j = 1; j < 4; ++j) {
      IndexSet last;
      for (std::size_t l = 1; l < 4; ++l)
        if (l != j) last.push_back(rest[l]);
      out.emplace_back(std::array<IndexMatching::Pair, 3>{{{a, six[i]}, {b, rest[j]}, {last[0], last[1]}}});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// FourSet

namespace {

int meet(const IndexSet& x, const IndexSet& y) {
  IndexSet m;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(m));
  if (m.size() != 1) throw Error(ErrorCode::kBadFourSet, "4-set triples must meet in exactly one index");
  return m[0];
}

}  // namespace

FourSet::FourSet(std::array<IndexSet, 4> sets) : sets_(std::move(sets)) {
  std::map<int, int> count;
  for (auto& s : sets_) {
    std::sort(s.begin(), s.end());
    if (s.size() != 3 || std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(ErrorCode::kBadFourSet, "4-set members must be 3-subsets");
    for (int i : s) ++count[i];
  }
  std::sort(sets_.begin(), sets_.end());
  if (count.size() != 6) throw Error(ErrorCode::kBadFourSet, "4-set must cover six indices");
  for (const auto& [i, c] : count)
    if (c != 2) throw Error(ErrorCode::kBadFourSet, "each index of a 4-set lies in two triples");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) meet(sets_[i], sets_[j]);
}

std::array<FourSet, 2> FourSet::from_matching(const IndexMatching& m) {
  const auto& p = m.pairs();
  std::array<std::array<IndexSet, 4>, 2> cls;
  std::array<std::size_t, 2> fill{0, 0};
  for (int bits = 0; bits < 8; ++bits) {
    const int x = bits & 1, y = bits >> 1 & 1, z = bits >> 2 & 1;
    const int parity = (x + y + z) % 2;
    cls[static_cast<std::size_t>(parity)][fill[static_cast<std::size_t>(parity)]++] = {
        p[0][static_cast<std::size_t>(x)], p[1][static_cast<std::size_t>(y)], p[2][static_cast<std::size_t>(z)]};
  }
  return {FourSet(cls[0]), FourSet(cls[1])};
}

std::array<int, 6> FourSet::labels() const {
  const auto& L = sets_;
  return {meet(L[0], L[1]), meet(L[0], L[2]), meet(L[0], L[3]),
          meet(L[2], L[3]), meet(L[1], L[3]), meet(L[1], L[2])};
}

IndexSet FourSet::support() const {
  IndexSet s;
  for (const auto& t : sets_) s.insert(s.end(), t.begin(), t.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

FourSet FourSet::complement() const {
  const IndexSet all = support();
  std::array<IndexSet, 4> c;
  for (std::size_t i = 0; i < 4; ++i)
    std::set_difference(all.begin(), all.end(), sets_[i].begin(), sets_[i].end(), std::back_inserter(c[i]));
  return FourSet(c);
}

IndexMatching FourSet::matching() const {
  const auto p = labels();
  return IndexMatching({{{p[0], p[3]}, {p[1], p[4]}, {p[2], p[5]}}});
}

std::string FourSet::to_string() const {
  std::string out;
  for (const auto& s : sets_) {
    if (!out.empty()) out += ' ';
    out += format_indices(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// QuintFamily

QuintFamily::QuintFamily(int center, std::array<int, 3> row1, std::array<int, 3> row2)
    : center_(center), row1_(row1), row2_(row2) {
  IndexSet all{center, row1[0], row1[1], row1[2], row2[0], row2[1], row2[2]};
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw Error(ErrorCode::kInvalidArgument, "quintuple family needs seven distinct indices");
  const int lo = all[0] == center ? all[1] : all[0];
  if (std::find(row2_.begin(), row2_.end(), lo) != row2_.end()) std::swap(row1_, row2_);
  std::array<std::array<int, 2>, 3> spokes{{{row1_[0], row2_[0]}, {row1_[1], row2_[1]}, {row1_[2], row2_[2]}}};
  std::sort(spokes.begin(), spokes.end());
  for (std::size_t i = 0; i < 3; ++i) {
    row1_[i] = spokes[i][0];
    row2_[i] = spokes[i][1];
  }
}

std::array<IndexSet, 5> QuintFamily::sets() const {
  std::array<IndexSet, 5> s{IndexSet{center_, row1_[0], row2_[0]}, IndexSet{center_, row1_[1], row2_[1]},
                            IndexSet{center_, row1_[2], row2_[2]}, IndexSet{row1_[0], row1_[1], row1_[2]},
                            IndexSet{row2_[0], row2_[1], row2_[2]}};
  for (auto& t : s) std::sort(t.begin(), t.end());
  return s;
}

std::string QuintFamily::to_string() const {
  return format_indices({center_}) + ": " + format_indices({row1_[0], row1_[1], row1_[2]}) + " / " +
         format_indices({row2_[0], row2_[1], row2_[2]});
}

std::array<IndexSet, 3> Good6Partition::sets() const {
  const auto& p = matching.pairs();
  std::array<IndexSet, 3> out{IndexSet{p[0][0], p[0][1], p[1][0], p[1][1]},
                              IndexSet{p[0][0], p[0][1], p[2][0], p[2][1]},
                              IndexSet{p[1][0], p[1][1], p[2][0], p[2][1]}};
  for (auto& s : out) std::sort(s.begin(), s.end());
  return out;
}

// ---------------------------------------------------------------------------
// k = 2 detectors

namespace {

void require_k(const Arrangement& a, std::size_t k) {
  if (a.k() != k) {
    if (k == 3) throw Error(ErrorCode::kNotDimension3, "criterion needs an arrangement in K^3");
    throw Error(ErrorCode::kDimensionMismatch, "criterion needs an arrangement in K^" + std::to_string(k));
  }
}

void require_generic(const Arrangement& a) {
  if (!is_generic(a)) throw Error(ErrorCode::kNotGeneric, "arrangement is not generic");
}

void require_indices(const Arrangement& a, const IndexSet& s) {
  for (int i : s)
    if (i < 1 || i > static_cast<int>(a.n())) throw Error(ErrorCode::kBadSubsetSize, "index out of range");
}

// All 2x2 determinants |a_i a_j|, 1-based.
class PairDets {
 public:
  explicit PairDets(const Arrangement& a) : n_(a.n()) {
    d_.reserve((n_ + 1) * (n_ + 1));
    for (std::size_t i = 0; i <= n_; ++i)
      for (std::size_t j = 0; j <= n_; ++j)
        d_.push_back(i == 0 || j == 0 ? FieldElement::zero(a.field())
                                      : det2(a.normal(static_cast<int>(i)), a.normal(static_cast<int>(j))));
  }
  const FieldElement& operator()(int i, int j) const {
    return d_[static_cast<std::size_t>(i) * (n_ + 1) + static_cast<std::size_t>(j)];
  }

 private:
  std::size_t n_;
  std::vector<FieldElement> d_;
};

bool ceva_holds(const PairDets& d, const FourSet& f) {
  const auto p = f.labels();
  auto D = [&](int i, int j) -> const FieldElement& { return d(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(j - 1)]); };
  return D(1, 5) * D(2, 6) * D(3, 4) == D(1, 6) * D(2, 4) * D(3, 5);
}

}  // namespace

FieldElement ceva_value(const Arrangement& a, const FourSet& f) {
  require_k(a, 2);
  require_indices(a, f.support());
  const auto p = f.labels();
  auto D = [&](int i, int j) { return det2(a.normal(p[static_cast<std::size_t>(i - 1)]), a.normal(p[static_cast<std::size_t>(j - 1)])); };
  return D(1, 5) * D(2, 6) * D(3, 4) / (D(1, 6) * D(2, 4) * D(3, 5));
}

FieldElement crossratio_form(const Arrangement& a, const FourSet& f) {
  require_k(a, 2);
  require_indices(a, f.support());
  const auto p = f.labels();
  auto al = [&](int i) -> const Vector& { return a.normal(p[static_cast<std::size_t>(i - 1)]); };
  return cross_ratio(al(2), al(3), al(1), al(4)) * cross_ratio(al(3), al(1), al(2), al(5)) *
         cross_ratio(al(1), al(2), al(3), al(6));
}

std::vector<FourSet> quadral_points(const Arrangement& a) {
  require_k(a, 2);
  require_generic(a);
  const PairDets d(a);
  std::vector<FourSet> out;
  for (const auto& six : subsets(static_cast<int>(a.n()), 6))
    for (const auto& m : matchings_of(six))
      for (const auto& f : FourSet::from_matching(m))
        if (ceva_holds(d, f)) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Involution> find_involutions(const Arrangement& a) {
  require_k(a, 2);
  if (a.n() != 6) throw Error(ErrorCode::kInvalidArgument, "involution search is defined for n = 6");
  require_generic(a);
  std::vector<Involution> out;
  for (const auto& m : matchings_of({1, 2, 3, 4, 5, 6})) {
    const auto& p = m.pairs();
    const auto& al = [&](int i) -> const Vector& { return a.normal(i); };
    ProjectiveMap f = projective_map_through({al(p[0][0]), al(p[0][1]), al(p[1][0])},
                                             {al(p[0][1]), al(p[0][0]), al(p[1][1])});
    bool ok = f.compose(f).is_identity();
    for (int i = 1; ok && i <= 6; ++i) ok = projectively_equal(f.apply(al(i)), al(m.partner(i)));
    if (ok) out.push_back({m, std::move(f)});
  }
  return out;
}

QuintValue quint_value(const Arrangement& a, const QuintFamily& q) {
  require_k(a, 2);
  const auto& r1 = q.row1();
  const auto& r2 = q.row2();
  require_indices(a, {q.center(), r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]});
  const Vector& c = a.normal(q.center());
  return {cross_ratio(c, a.normal(r1[0]), a.normal(r1[1]), a.normal(r1[2])),
          cross_ratio(c, a.normal(r2[0]), a.normal(r2[1]), a.normal(r2[2]))};
}

namespace {

struct ReprLess {
  bool operator()(const FieldElement& x, const FieldElement& y) const { return representation_less(x, y); }
};

}  // namespace

std::vector<QuintFamily> quintuple_points(const Arrangement& a) {
  require_k(a, 2);
  if (a.n() < 7) throw Error(ErrorCode::kTooFewHyperplanes, "quintuple families need n >= 7");
  require_generic(a);
  const PairDets d(a);
  const int n = static_cast<int>(a.n());
  std::set<QuintFamily> found;
  for (int c = 1; c <= n; ++c) {
    std::map<FieldElement, std::vector<std::array<int, 3>>, ReprLess> groups;
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        for (int z = 1; z <= n; ++z) {
          if (x == c || y == c || z == c || x == y || y == z || x == z) continue;
          // [a_c, a_x; a_y, a_z]
          groups[d(c, y) * d(x, z) / (d(x, y) * d(c, z))].push_back({x, y, z});
        }
    for (const auto& [value, triples] : groups)
      for (std::size_t i = 0; i < triples.size(); ++i)
        for (std::size_t j = i + 1; j < triples.size(); ++j) {
          const auto& s = triples[i];
          const auto& t = triples[j];
          bool disjoint = true;
          for (int u : s)
            for (int v : t) disjoint = disjoint && u != v;
          if (disjoint) found.insert(QuintFamily(c, s, t));
        }
  }
  return {found.begin(), found.end()};
}

std::vector<ClosureViolation> quint_closure_checks(const std::vector<QuintFamily>& detected) {
  const std::set<QuintFamily> have(detected.begin(), detected.end());
  std::vector<ClosureViolation> out;

  // Bijections row1 -> row2 per (center, row1, row2 as a set).
  std::map<std::tuple<int, std::array<int, 3>, std::array<int, 3>>, std::vector<std::array<int, 3>>> by_rows;
  // Row splits per (center, spoke set).
  std::map<std::pair<int, std::array<std::array<int, 2>, 3>>, int> by_spokes;
  for (const auto& q : detected) {
    auto r2 = q.row2();
    std::sort(r2.begin(), r2.end());
    by_rows[{q.center(), q.row1(), r2}].push_back(q.row2());
    std::array<std::array<int, 2>, 3> sp;
    for (std::size_t i = 0; i < 3; ++i) sp[i] = {std::min(q.row1()[i], q.row2()[i]), std::max(q.row1()[i], q.row2()[i])};
    std::sort(sp.begin(), sp.end());
    ++by_spokes[{q.center(), sp}];
  }

  for (const auto& [key, bijections] : by_rows) {
    const int c = std::get<0>(key);
    const auto& r1 = std::get<1>(key);
    for (const auto& b1 : bijections)
      for (const auto& b2 : bijections) {
        if (b1 == b2) continue;
        std::array<int, 3> psi{};
        for (std::size_t i = 0; i < 3; ++i) {
          const std::size_t j = static_cast<std::size_t>(std::find(b2.begin(), b2.end(), b1[i]) - b2.begin());
          psi[i] = b1[j];
        }
        const QuintFamily want(c, r1, psi);
        if (!have.count(want))
          out.push_back({"spoke-composition", QuintFamily(c, r1, b1).to_string() + " + " + QuintFamily(c, r1, b2).to_string(),
                         want.to_string()});
      }
  }

  for (const auto& [key, count] : by_spokes) {
    if (count != 3) continue;
    const auto& [c, sp] = key;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        const QuintFamily q(c, {sp[0][0], sp[1][static_cast<std::size_t>(x)], sp[2][static_cast<std::size_t>(y)]},
                            {sp[0][1], sp[1][static_cast<std::size_t>(1 - x)], sp[2][static_cast<std::size_t>(1 - y)]});
        if (!have.count(q)) out.push_back({"row-split", "three row splits of center " + std::to_string(c), q.to_string()});
      }
  }
  return out;
}

std::vector<ClosureViolation> quint_closure_checks(const Arrangement& a) {
  if (a.n() < 7) return {};
  return quint_closure_checks(quintuple_points(a));
}

// ---------------------------------------------------------------------------
// k = 3 detectors

FieldElement good6_condition(const Arrangement& a, const IndexMatching& m) {
  require_k(a, 3);
  require_indices(a, m.support());
  std::vector<Vector> rows;
  for (const auto& p : m.pairs()) rows.push_back(cross3(a.normal(p[0]), a.normal(p[1])));
  return det(Matrix::from_rows(a.field(), rows));
}

std::vector<IndexMatching> good6_points(const Arrangement& a) {
  require_k(a, 3);
  require_generic(a);
  const int n = static_cast<int>(a.n());
  std::map<std::pair<int, int>, Vector> cross;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) cross.emplace(std::make_pair(i, j), cross3(a.normal(i), a.normal(j)));
  std::vector<IndexMatching> out;
  for (const auto& six : subsets(n, 6))
    for (const auto& m : matchings_of(six)) {
      std::vector<Vector> rows;
      for (const auto& p : m.pairs()) rows.push_back(cross.at({p[0], p[1]}));
      if (det(Matrix::from_rows(a.field(), rows)).is_zero()) out.push_back(m);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClosureViolation> pappus_closure_check(const std::vector<IndexMatching>& detected) {
  const std::set<IndexMatching> have(detected.begin(), detected.end());
  std::vector<ClosureViolation> out;
  for (const auto& s1 : detected)
    for (const auto& s2 : detected) {
      if (s1 == s2 || s1.support() != s2.support() || s1.shares_pair(s2)) continue;
      const IndexMatching s3 = s2.conjugate_by(s1);
      if (!have.count(s3)) out.push_back({"pappus", s1.to_string() + " + " + s2.to_string(), s3.to_string()});
    }
  return out;
}

std::vector<ClosureViolation> pappus_closure_check(const Arrangement& a) {
  if (a.n() < 6) return {};
  return pappus_closure_check(good6_points(a));
}

std::size_t family_rank(const DiscriminantalArrangement& d, const std::vector<IndexSet>& sets) {
  std::vector<Vector> rows;
  for (const auto& s : sets) rows.push_back(d.normals()[d.index_of(s)]);
  return rank(d.base().field(), rows);
}

std::size_t detected_m(const Arrangement& a) {
  if (a.k() == 2) {
    if (a.n() < 6) return 0;
    std::size_t m = quadral_points(a).size();
    if (a.n() >= 7) m += quintuple_points(a).size();
    return m;
  }
  if (a.k() == 3) return a.n() < 6 ? 0 : good6_points(a).size();
  throw Error(ErrorCode::kInvalidArgument, "detectors cover k = 2 and k = 3");
}

}  // namespace discarr
