#include "discarr/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "discarr/errors.hpp"

namespace discarr {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

RationalPoly RationalPoly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.emplace_back(v);
  return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const { return *this + (-o); }

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> r = c_;
  for (auto& c : r) c = -c;
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator*(const Rational& s) const {
  std::vector<Rational> r = c_;
  for (auto& c : r) c *= s;
  return RationalPoly(std::move(r));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& d) const {
  if (d.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = c_;
  const int dd = d.degree();
  if (degree() < dd) return {RationalPoly{}, *this};
  std::vector<Rational> q(static_cast<std::size_t>(degree() - dd) + 1, Rational(0));
  for (int i = degree(); i >= dd; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] / d.leading();
    if (f == 0) continue;
    q[static_cast<std::size_t>(i - dd)] = f;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  return {RationalPoly(std::move(q)), RationalPoly(std::move(rem))};
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

Rational RationalPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Integer> RationalPoly::primitive_integer() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& c : c_) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> r;
  r.reserve(c_.size());
  Integer g = 0;
  for (const auto& c : c_) {
    Integer v = c.get_num() * (den / c.get_den());
    g = gcd(g, v);
    r.push_back(v);
  }
  if (r.back() < 0) g = -g;
  for (auto& v : r) v /= g;
  return r;
}

std::string RationalPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || c != 1) os << c.get_str();
    if (i >= 1) {
      if (c != 1) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a, y = b;
  while (!y.is_zero()) {
    RationalPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RationalPoly inverse_mod(const RationalPoly& a, const RationalPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  RationalPoly r0 = m, r1 = a.divmod(m).second;
  RationalPoly s0, s1 = RationalPoly::monomial(1, 0);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    RationalPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw Error(ErrorCode::kDivisionByZero, "polynomial not invertible");
  return (s0 * (Rational(1) / r0.leading())).divmod(m).second;
}

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> d;
  for (Integer i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  }
  return d;
}

}  // namespace

std::vector<Rational> rational_roots(const RationalPoly& p) {
  std::set<Rational> roots;
  if (p.is_zero()) throw Error(ErrorCode::kInvalidArgument, "roots of the zero polynomial");
  std::vector<Integer> c = p.primitive_integer();
  // x = 0 roots first, then the rational root theorem on the rest.
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  std::vector<Integer> q(c.begin() + static_cast<std::ptrdiff_t>(low), c.end());
  if (q.size() > 1) {
    const RationalPoly qp = RationalPoly::from_integers(q);
    for (const auto& num : divisors(q.front())) {
      for (const auto& den : divisors(q.back())) {
        for (int s : {1, -1}) {
          Rational r(num * s, den);
          r.canonicalize();
          if (qp.evaluate(r) == 0) roots.insert(r);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::pair<std::vector<Rational>, RationalPoly> split_rational_roots(const RationalPoly& p) {
  std::vector<Rational> found;
  RationalPoly rest = p;
  for (const auto& r : rational_roots(p)) {
    const RationalPoly lin({-r, Rational(1)});
    while (rest.degree() >= 1) {
      auto [q, rem] = rest.divmod(lin);
      if (!rem.is_zero()) break;
      found.push_back(r);
      rest = std::move(q);
    }
  }
  return {found, rest};
}

bool is_irreducible_over_q(const RationalPoly& p) {
  const int d = p.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  if (d > 4) throw Error(ErrorCode::kInvalidArgument, "irreducibility test limited to degree <= 4");
  if (!rational_roots(p).empty()) return false;
  if (d <= 3) return true;
  // Degree 4 without linear factors: look for (x^2+ax+b)(x^2+cx+e) over Z
  // after making the polynomial monic with integer coefficients (Gauss).
  std::vector<Integer> c = p.primitive_integer();
  // Substitute x -> x / lead to get a monic integer polynomial.
  const Integer lead = c[4];
  std::vector<Integer> m(5);
  Integer pw = 1;
  for (int i = 4; i >= 0; --i) {
    m[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] * pw;
    if (i < 4) pw *= lead;
  }
  // m is lead^3 * p(x / lead) scaled: monic after dividing by lead.
  for (auto& v : m) v /= lead;
  const RationalPoly monic = RationalPoly::from_integers(m);
  for (const auto& b : divisors(m[0])) {
    for (int sb : {1, -1}) {
      const Integer bb = b * sb;
      const Integer ee = m[0] / bb;
      // x^3 coefficient: a + c = m3; x coefficient: a*e + b*c = m1.
      // Solve the linear system for a (c = m3 - a) when b != e.
      if (bb != ee) {
        const Integer num = m[1] - bb * m[3];
        const Integer den = ee - bb;
        if (num % den != 0) continue;
        const Integer a = num / den;
        const Integer cc = m[3] - a;
        const RationalPoly f1 = RationalPoly::from_integers({bb, a, 1});
        const RationalPoly f2 = RationalPoly::from_integers({ee, cc, 1});
        if (f1 * f2 == monic) return false;
      } else {
        // b == e: a + c = m3 and a*c + 2b = m2, so a is a root of
        // t^2 - m3*t + (m2 - 2b).
        const Integer disc = m[3] * m[3] - 4 * (m[2] - 2 * bb);
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
        const Integer root = sqrt(disc);
        for (const Integer& twice_a : std::vector<Integer>{m[3] + root, m[3] - root}) {
          if (twice_a % 2 != 0) continue;
          const Integer a = twice_a / 2;
          const Integer cc = m[3] - a;
          const RationalPoly f1 = RationalPoly::from_integers({bb, a, 1});
          const RationalPoly f2 = RationalPoly::from_integers({ee, cc, 1});
          if (f1 * f2 == monic) return false;
        }
      }
    }
  }
  return true;
}

namespace modp {

std::int64_t reduce(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse(std::int64_t a, std::int64_t p) {
  a = reduce(a, p);
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero mod p");
  std::int64_t t0 = 0, t1 = 1, r0 = p, r1 = a;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
  }
  return reduce(t0, p);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::int64_t p) {
  if (b.empty()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero mod p");
  Poly rem = a;
  trim(rem);
  if (rem.size() < b.size()) return {Poly{}, rem};
  const std::int64_t inv_lead = inverse(b.back(), p);
  Poly q(rem.size() - b.size() + 1, 0);
  for (std::size_t i = rem.size(); i-- >= b.size();) {
    const std::int64_t f = rem[i] * inv_lead % p;
    if (f == 0) continue;
    q[i - (b.size() - 1)] = f;
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto& slot = rem[i - (b.size() - 1) + j];
      slot = reduce(slot - f * b[j], p);
    }
  }
  trim(q);
  trim(rem);
  return {q, rem};
}

Poly inverse_mod(const Poly& a, const Poly& m, std::int64_t p) {
  Poly r0 = m, r1 = divmod(a, m, p).second;
  Poly s0, s1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    Poly qs = mul(q, s1, p);
    Poly s(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s0.size(); ++i) s[i] = s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) s[i] = reduce(s[i] - qs[i], p);
    trim(s);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw Error(ErrorCode::kDivisionByZero, "element not invertible mod modulus");
  const std::int64_t c = inverse(r0[0], p);
  for (auto& v : s0) v = v * c % p;
  return divmod(s0, m, p).second;
}

bool is_irreducible(const Poly& f, std::int64_t p) {
  Poly g = f;
  trim(g);
  const int deg = static_cast<int>(g.size()) - 1;
  if (deg < 1) return false;
  // Enumerate every monic divisor candidate of degree 1..deg/2.
  for (int d = 1; d <= deg / 2; ++d) {
    double count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<double>(p);
    if (count > 1e6) throw Error(ErrorCode::kTooLarge, "irreducibility search space too large");
    Poly cand(static_cast<std::size_t>(d) + 1, 0);
    cand[static_cast<std::size_t>(d)] = 1;
    const auto total = static_cast<std::int64_t>(count);
    for (std::int64_t idx = 0; idx < total; ++idx) {
      std::int64_t v = idx;
      for (int i = 0; i < d; ++i) {
        cand[static_cast<std::size_t>(i)] = v % p;
        v /= p;
      }
      if (divmod(g, cand, p).second.empty()) return false;
    }
  }
  return true;
}

}  // namespace modp

}  // namespace discarr
