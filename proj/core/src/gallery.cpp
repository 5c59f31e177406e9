#include "discarr/gallery.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace discarr {

long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

Vector vec(const FieldDescriptor& fd, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(FieldElement::from_integer(fd, x));
  return v;
}

}  // namespace

Arrangement crapo() {
  const auto q = FieldDescriptor::rational();
  return Arrangement(q, 2, {vec(q, {1, 0}), vec(q, {0, 1}), vec(q, {1, 1}), vec(q, {2, 1}), vec(q, {3, 1}), vec(q, {4, 1})});
}

Arrangement octahedral() {
  const auto k = FieldDescriptor::quadratic(-1);
  const FieldElement i = FieldElement::generator(k);
  const FieldElement one = FieldElement::one(k);
  return Arrangement(k, 2,
                     {vec(k, {1, 0}), vec(k, {0, 1}), vec(k, {1, 1}), vec(k, {-1, 1}), Vector{i, one}, Vector{-i, one}});
}

Arrangement dodecahedral() {
  const auto k = FieldDescriptor::quadratic(5);
  const FieldElement t = parse_element("1/2 + 1/2*g", k);
  const FieldElement o = FieldElement::one(k), z = FieldElement::zero(k);
  return Arrangement(k, 3,
                     {Vector{o, z, t}, Vector{o, z, -t}, Vector{z, t, o}, Vector{z, -t, o}, Vector{t, o, z}, Vector{-t, o, z}});
}

Arrangement six_plane_normal_form(const std::array<FieldElement, 4>& p) {
  const FieldDescriptor& fd = p[0].field();
  const FieldElement o = FieldElement::one(fd);
  return Arrangement(fd, 3,
                     {vec(fd, {1, 0, 0}), vec(fd, {0, 1, 0}), vec(fd, {0, 0, 1}), vec(fd, {1, 1, 1}),
                      Vector{p[0], p[1], o}, Vector{p[2], p[3], o}});
}

Arrangement f4_arrangement() {
  const auto k = FieldDescriptor::galois(2, {1, 1, 1});
  const FieldElement w = FieldElement::generator(k);
  const FieldElement w2 = w * w;
  return six_plane_normal_form({w, w2, w2, w});
}

Arrangement f5_arrangement() {
  const auto k = FieldDescriptor::prime(5);
  return Arrangement(k, 2, {vec(k, {1, 0}), vec(k, {0, 1}), vec(k, {1, 1}), vec(k, {2, 1}), vec(k, {3, 1}), vec(k, {4, 1})});
}

Arrangement regular_polygon(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "regular polygon arrangement needs n >= 3");
  const auto k = FieldDescriptor::cyclotomic(4 * n);
  const FieldElement zeta = FieldElement::generator(k);
  const FieldElement i = zeta.pow(n);
  const FieldElement half = FieldElement::from_rational(k, Rational(1, 2));
  const FieldElement half_over_i = half / i;
  std::vector<Vector> normals;
  for (int p = 1; p <= n; ++p) {
    const FieldElement u = zeta.pow(2 * p), v = zeta.pow(-2 * p);
    normals.push_back({(u + v) * half, (u - v) * half_over_i});
  }
  return Arrangement(k, 2, std::move(normals));
}

// ---------------------------------------------------------------------------
// Normal form equations

namespace {

using PolyVec = std::array<MPoly, 3>;

PolyVec normal_form_column(int p) {
  const MPoly o = MPoly::constant(1), z;
  switch (p) {
    case 1: return {o, z, z};
    case 2: return {z, o, z};
    case 3: return {z, z, o};
    case 4: return {o, o, o};
    case 5: return {MPoly::var(MPoly::kW), MPoly::var(MPoly::kX), o};
    case 6: return {MPoly::var(MPoly::kY), MPoly::var(MPoly::kZ), o};
  }
  throw Error(ErrorCode::kInvalidArgument, "normal form has six columns");
}

PolyVec cross(const PolyVec& u, const PolyVec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

IndexMatching matching_of(const Perm& s) {
  std::array<IndexMatching::Pair, 3> pairs{};
  std::size_t n = 0;
  for (const auto& orbit : o_map(s)) {
    if (orbit.size() != 2 || n == 3) throw Error(ErrorCode::kNotAMatchingLabel, s.to_string() + " is not a matching");
    pairs[n++] = {orbit[0], orbit[1]};
  }
  if (n != 3) throw Error(ErrorCode::kNotAMatchingLabel, s.to_string() + " is not a matching");
  return IndexMatching(pairs);
}

}  // namespace

MPoly edge_equation(const IndexMatching& m) {
  if (m.support() != IndexSet{1, 2, 3, 4, 5, 6})
    throw Error(ErrorCode::kInvalidArgument, "edge equations need a matching of [6]");
  std::array<PolyVec, 3> r;
  for (std::size_t i = 0; i < 3; ++i)
    r[i] = cross(normal_form_column(m.pairs()[i][0]), normal_form_column(m.pairs()[i][1]));
  return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
         r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

std::vector<MPoly> genericity_conditions() {
  const MPoly w = MPoly::var(MPoly::kW), x = MPoly::var(MPoly::kX), y = MPoly::var(MPoly::kY),
              z = MPoly::var(MPoly::kZ), one = MPoly::constant(1);
  return {w,         x,         y,         z,         w - one,     x - one,
          y - one,   z - one,   w - x,     w - y,     x - z,       y - z,
          w * z - x * y,        w - x - y + z - w * z + x * y};
}

// ---------------------------------------------------------------------------
// Classification solver

namespace {

constexpr std::array<int, 4> kEliminationOrder{MPoly::kY, MPoly::kZ, MPoly::kW, MPoly::kX};
constexpr std::array<int, 4> kChoiceOrder{MPoly::kX, MPoly::kW, MPoly::kZ, MPoly::kY};
constexpr int kMaxAttempts = 64;

struct State {
  std::vector<MPoly> eqs;
  std::vector<std::pair<int, MPoly>> subs;
  bool perturbed = false;
};

enum class Outcome { kFound, kDead, kRetry };

struct Branch {
  Outcome outcome;
  bool certified = false;
  std::optional<Witness> witness;
};

Branch dead(bool certified) { return {Outcome::kDead, certified, std::nullopt}; }
Branch retry() { return {Outcome::kRetry, false, std::nullopt}; }

std::string var_name(int v) { return std::string(1, MPoly::name(v)); }

// Squarefree part d and rational s with D = s^2 d.
std::pair<long, Rational> split_square(const Rational& disc) {
  Integer n = disc.get_num() * disc.get_den();
  const Integer den = disc.get_den();
  long sign = n < 0 ? -1 : 1;
  if (n < 0) n = -n;
  Integer d = 1, s = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      s *= p;
    }
    if (n % p == 0) {
      n /= p;
      d *= p;
    }
  }
  d *= n;
  if (!d.fits_slong_p()) throw Error(ErrorCode::kTooLarge, "discriminant too large");
  return {sign * d.get_si(), Rational(s, den)};
}

class Solver {
 public:
  Solver(const PartitionType& nu, ClassificationResult& res, std::uint64_t seed, int attempt)
      : nu_(nu), res_(res), rng_(seed * 1000003ULL + static_cast<std::uint64_t>(attempt)), attempt_(attempt),
        conditions_(genericity_conditions()) {}

  Branch run(State s) { return branch(std::move(s)); }

 private:
  void log(const std::string& s) { res_.trace.push_back(s); }

  static void apply(State& s, int v, const MPoly& value) {
    std::vector<MPoly> eqs;
    for (const auto& e : s.eqs) {
      MPoly r = e.substitute(v, value);
      if (!r.is_zero()) eqs.push_back(std::move(r));
    }
    s.eqs = std::move(eqs);
    for (auto& [u, e] : s.subs) e = e.substitute(v, value);
    s.subs.emplace_back(v, value);
  }

  void eliminate(State& s) {
    for (bool again = true; again;) {
      again = false;
      for (int v : kEliminationOrder) {
        for (const auto& e : s.eqs) {
          if (e.degree_in(v) != 1) continue;
          const MPoly c = e.coefficient(v, 1);
          if (!c.is_constant()) continue;
          const MPoly value = e.coefficient(v, 0) * Rational(-1 / c.constant_term());
          log(var_name(v) + " = " + value.to_string());
          apply(s, v, value);
          again = true;
          break;
        }
        if (again) break;
      }
    }
  }

  // The first genericity condition that vanishes identically, if any.
  std::optional<MPoly> violated(const State& s) const {
    for (const auto& c : conditions_) {
      MPoly r = c;
      for (const auto& [v, e] : s.subs) r = r.substitute(v, e);
      if (r.is_zero()) return c;
    }
    return std::nullopt;
  }

  Rational free_value(int v) {
    if (attempt_ == 0 && v == MPoly::kX) return 2;
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    Rational r;
    do {
      r = Rational(num(rng_), den(rng_));
      r.canonicalize();
    } while (r == 0 || r == 1);
    return r;
  }

  Branch branch(State s) {
    eliminate(s);
    for (const auto& e : s.eqs)
      if (e.is_constant()) {
        log("contradiction: " + e.to_string() + " = 0");
        return dead(!s.perturbed);
      }
    if (auto c = violated(s)) {
      log("condition " + c->to_string() + " != 0 fails identically");
      return dead(!s.perturbed);
    }
    if (s.eqs.empty()) return finish(s, std::nullopt);

    for (int v : kChoiceOrder) {
      std::vector<RationalPoly> uni;
      bool only_v = true;
      for (const auto& e : s.eqs) {
        if (e.variables() == std::vector<int>{v})
          uni.push_back(e.to_univariate(v));
        else
          only_v = false;
      }
      if (uni.empty()) continue;
      RationalPoly g = uni[0];
      for (const auto& p : uni) g = gcd(g, p);
      const bool top = !s.perturbed && !res_.residual;
      if (top) {
        res_.reduced = s.subs;
        res_.residual = uni.size() == 1 ? uni[0] : g;
        res_.residual_var = v;
      }
      log(g.to_string(MPoly::name(v)) + " = 0");
      auto [roots, cof] = split_rational_roots(g);
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      bool all_certified = true;
      for (const auto& r : roots) {
        log("try " + var_name(v) + " = " + r.get_str());
        State child = s;
        apply(child, v, MPoly::constant(r));
        Branch b = branch(std::move(child));
        if (b.outcome == Outcome::kFound) return b;
        if (b.outcome == Outcome::kDead && b.certified) {
          if (top) res_.rejected_roots.push_back(r);
        } else {
          all_certified = false;
        }
      }
      if (cof.degree() >= 1) {
        if (top) res_.extension_polynomial = cof;
        bool divides = only_v && cof.degree() == 2 && is_irreducible_over_q(cof);
        for (const auto& p : uni) divides = divides && p.divmod(cof).second.is_zero();
        if (!divides)
          throw Error(ErrorCode::kInvalidArgument,
                      "solver cannot handle the remainder " + cof.to_string(MPoly::name(v)));
        Branch b = finish(s, std::make_pair(v, cof));
        if (b.outcome == Outcome::kFound && top && all_certified && !b.witness->perturbed)
          res_.certified_irrational = true;
        if (b.outcome == Outcome::kDead && !b.certified) all_certified = false;
        if (b.outcome != Outcome::kDead) return b;
      }
      if (!all_certified) return retry();
      return dead(!s.perturbed);
    }

    std::vector<int> present;
    for (const auto& e : s.eqs)
      for (int v : e.variables()) present.push_back(v);
    for (int v : kChoiceOrder) {
      if (std::find(present.begin(), present.end(), v) == present.end()) continue;
      const Rational r = free_value(v);
      log("choose " + var_name(v) + " = " + r.get_str());
      State child = s;
      child.perturbed = true;
      apply(child, v, MPoly::constant(r));
      return branch(std::move(child));
    }
    throw Error(ErrorCode::kInvalidArgument, "solver reached a system without variables");
  }

  Branch finish(const State& s, const std::optional<std::pair<int, RationalPoly>>& ext) {
    FieldDescriptor fd = FieldDescriptor::rational();
    std::optional<FieldElement> root;
    if (ext) {
      const RationalPoly& q = ext->second;
      const Rational a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
      auto [d, sq] = split_square(b * b - 4 * a * c);
      fd = FieldDescriptor::quadratic(d);
      root = FieldElement::from_coefficients(fd, {-b / (2 * a), sq / (2 * a)});
      log("adjoin a root of " + q.to_string(MPoly::name(ext->first)) + " in " + fd.name());
    }
    bool perturbed = s.perturbed;
    std::array<FieldElement, 4> vals{FieldElement::zero(fd), FieldElement::zero(fd), FieldElement::zero(fd),
                                     FieldElement::zero(fd)};
    for (int v = 0; v < MPoly::kVars; ++v) {
      const bool bound = std::any_of(s.subs.begin(), s.subs.end(), [&](const auto& p) { return p.first == v; });
      if (bound) continue;
      if (ext && ext->first == v) {
        vals[static_cast<std::size_t>(v)] = *root;
      } else {
        const Rational r = free_value(v);
        log("free " + var_name(v) + " = " + r.get_str());
        vals[static_cast<std::size_t>(v)] = FieldElement::from_rational(fd, r);
        perturbed = true;
      }
    }
    for (const auto& [v, e] : s.subs) vals[static_cast<std::size_t>(v)] = e.evaluate(vals);

    Arrangement a = six_plane_normal_form(vals);
    if (!is_generic(a)) {
      log("candidate is not generic");
      return dead(!perturbed);
    }
    const TypeReport t = arrangement_type(a);
    if (!(t.type == nu_)) {
      log("candidate has type " + t.type.to_string());
      return perturbed ? retry() : dead(true);
    }
    return {Outcome::kFound, false, Witness{fd, vals, std::move(a), perturbed}};
  }

  const PartitionType& nu_;
  ClassificationResult& res_;
  std::mt19937_64 rng_;
  int attempt_;
  std::vector<MPoly> conditions_;
};

}  // namespace

ClassificationResult classify_type(const PartitionType& nu, std::uint64_t seed) {
  ClassificationResult res{nu, nu.representative(), {}, {}, {}, {}, MPoly::kX, {}, {}, false, false, {}, {}};
  const EdgeMask edges = induced_edges(res.partition);
  for (int e = 0; e < 15; ++e) {
    if (!(edges >> e & 1U)) continue;
    const auto v = edge_vertices(e);
    const IndexMatching m = matching_of(edge_label(v[0], v[1]));
    res.edge_matchings.push_back(m);
    res.equations.push_back(edge_equation(m));
  }
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    res.reduced.clear();
    res.residual.reset();
    res.rejected_roots.clear();
    res.extension_polynomial.reset();
    res.certified_irrational = false;
    res.trace.clear();
    Solver solver(nu, res, seed, attempt);
    Branch b = solver.run(State{res.equations, {}, false});
    if (b.outcome == Outcome::kFound) {
      res.witness = std::move(b.witness);
      return res;
    }
    if (b.outcome == Outcome::kDead && b.certified) {
      res.certified_none = true;
      return res;
    }
  }
  throw Error(ErrorCode::kExhaustedRetries, "no witness confirmed type " + nu.to_string());
}

std::optional<Arrangement> classification_witness(const PartitionType& nu) {
  ClassificationResult r = classify_type(nu);
  if (!r.witness) return std::nullopt;
  return r.witness->arrangement;
}

// ---------------------------------------------------------------------------
// Regular polygons

namespace {

int wrap(int q, int n) { return ((q - 1) % n + n) % n + 1; }

void add_choices(const std::vector<std::vector<int>>& orbits, bool with_quints, PolygonPrediction& out,
                 std::set<FourSet>& fs, std::set<QuintFamily>& qs) {
  std::vector<std::vector<int>> pairs, fixed;
  for (const auto& o : orbits) (o.size() == 2 ? pairs : fixed).push_back(o);
  IndexSet ids;
  for (std::size_t i = 0; i < pairs.size(); ++i) ids.push_back(static_cast<int>(i));
  for (const auto& pick : subsets_of(ids, 3)) {
    std::array<IndexMatching::Pair, 3> m{};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& p = pairs[static_cast<std::size_t>(pick[i])];
      m[i] = {p[0], p[1]};
    }
    for (const auto& f : FourSet::from_matching(IndexMatching(m)))
      if (fs.insert(f).second) out.foursets.push_back(f);
    if (!with_quints) continue;
    for (const auto& c : fixed)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          const auto sx = static_cast<std::size_t>(x), sy = static_cast<std::size_t>(y);
          const QuintFamily q(c[0], {m[0][0], m[1][sx], m[2][sy]}, {m[0][1], m[1][1 - sx], m[2][1 - sy]});
          if (qs.insert(q).second) out.quints.push_back(q);
        }
  }
}

}  // namespace

std::vector<std::vector<int>> reflection_orbits(int n, int p, bool between) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int q = 1; q <= n; ++q) {
    if (seen[static_cast<std::size_t>(q)]) continue;
    const int r = wrap(between ? 2 * p - 1 - q : 2 * p - q, n);
    seen[static_cast<std::size_t>(q)] = seen[static_cast<std::size_t>(r)] = true;
    out.push_back(q == r ? std::vector<int>{q} : std::vector<int>{std::min(q, r), std::max(q, r)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolygonPrediction predicted_polygon_sets(int n) {
  if (n < 6) throw Error(ErrorCode::kInvalidArgument, "polygon predictions need n >= 6");
  PolygonPrediction out;
  std::set<FourSet> fs;
  std::set<QuintFamily> qs;
  const bool quints = n >= 7;
  if (n % 2 == 0) {
    for (int p = 1; p <= n / 2; ++p) {
      add_choices(reflection_orbits(n, p, false), quints, out, fs, qs);
      add_choices(reflection_orbits(n, p, true), false, out, fs, qs);
    }
    std::vector<std::vector<int>> antipodal;
    for (int q = 1; q <= n / 2; ++q) antipodal.push_back({q, q + n / 2});
    add_choices(antipodal, false, out, fs, qs);
  } else {
    for (int p = 1; p <= n; ++p) add_choices(reflection_orbits(n, p, false), quints, out, fs, qs);
  }
  std::sort(out.foursets.begin(), out.foursets.end());
  std::sort(out.quints.begin(), out.quints.end());
  return out;
}

long polygon_quadral_bound(int n) {
  if (n % 2 == 0) return (n + 2) * binomial(n / 2, 3) + n * binomial(n / 2 - 1, 3);
  return 2L * n * binomial((n - 1) / 2, 3);
}

long polygon_quint_bound(int n) {
  if (n < 7) return 0;
  if (n % 2 == 0) return 4L * n * binomial(n / 2 - 1, 3);
  return 4L * n * binomial((n - 1) / 2, 3);
}

// ---------------------------------------------------------------------------
// Names

namespace {

std::string witness_name(const PartitionType& t) {
  std::string s = t.to_string();
  std::replace(s.begin(), s.end(), ' ', '_');
  return "witness-" + s;
}

const std::set<std::string>& starred() {
  static const std::set<std::string> s{"2^3", "2^1 4^1", "6^1"};
  return s;
}

}  // namespace

std::vector<std::string> gallery_names() {
  std::vector<std::string> names{"crapo", "octahedral", "dodecahedral", "f4", "f5"};
  for (int n = 6; n <= 10; ++n) names.push_back("polygon-" + std::to_string(n));
  for (const auto& t : PartitionType::all())
    if (!starred().count(t.to_string())) names.push_back(witness_name(t));
  return names;
}

Arrangement gallery_item(const std::string& name) {
  if (name == "crapo") return crapo();
  if (name == "octahedral") return octahedral();
  if (name == "dodecahedral") return dodecahedral();
  if (name == "f4") return f4_arrangement();
  if (name == "f5") return f5_arrangement();
  if (name.rfind("polygon-", 0) == 0) {
    const std::string num = name.substr(8);
    if (num.empty() || num.size() > 3 || !std::all_of(num.begin(), num.end(), ::isdigit))
      throw Error(ErrorCode::kInvalidArgument, "bad polygon size in '" + name + "'");
    return regular_polygon(std::stoi(num));
  }
  if (name.rfind("witness-", 0) == 0) {
    const PartitionType t = PartitionType::parse(name.substr(8));
    auto w = classification_witness(t);
    if (!w) throw Error(ErrorCode::kInvalidArgument, "type " + t.to_string() + " has no witness in characteristic 0");
    return *w;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown gallery item '" + name + "'");
}

}  // namespace discarr
