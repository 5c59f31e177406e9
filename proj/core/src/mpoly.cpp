#include "discarr/mpoly.hpp"

#include <algorithm>
#include <numeric>

namespace discarr {

MPoly MPoly::constant(const Rational& c) {
  MPoly p;
  p.add_term({0, 0, 0, 0}, c);
  return p;
}

MPoly MPoly::var(int v) {
  if (v < 0 || v >= kVars) throw Error(ErrorCode::kInvalidArgument, "variable index out of range");
  MPoly p;
  Exponent e{0, 0, 0, 0};
  e[static_cast<std::size_t>(v)] = 1;
  p.add_term(e, 1);
  return p;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0, 0});
}

Rational MPoly::constant_term() const {
  auto it = terms_.find({0, 0, 0, 0});
  return it == terms_.end() ? Rational(0) : it->second;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-() const { return *this * Rational(-1); }

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e;
      for (std::size_t i = 0; i < kVars; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MPoly MPoly::operator*(const Rational& c) const {
  MPoly r;
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

int MPoly::degree_in(int v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
  return d;
}

MPoly MPoly::coefficient(int v, int power) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<std::size_t>(v)] != power) continue;
    Exponent f = e;
    f[static_cast<std::size_t>(v)] = 0;
    r.add_term(f, c);
  }
  return r;
}

MPoly MPoly::substitute(int v, const MPoly& value) const {
  std::vector<MPoly> powers{constant(1)};
  MPoly r;
  for (const auto& [e, c] : terms_) {
    const int k = e[static_cast<std::size_t>(v)];
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * value);
    Exponent f = e;
    f[static_cast<std::size_t>(v)] = 0;
    MPoly mono;
    mono.add_term(f, c);
    r = r + mono * powers[static_cast<std::size_t>(k)];
  }
  return r;
}

std::vector<int> MPoly::variables() const {
  std::vector<int> out;
  for (int v = 0; v < kVars; ++v)
    if (degree_in(v) > 0) out.push_back(v);
  return out;
}

RationalPoly MPoly::to_univariate(int v) const {
  std::vector<Rational> c(static_cast<std::size_t>(degree_in(v)) + 1, Rational(0));
  for (const auto& [e, val] : terms_) {
    for (int u = 0; u < kVars; ++u)
      if (u != v && e[static_cast<std::size_t>(u)] != 0)
        throw Error(ErrorCode::kInvalidArgument, "polynomial is not univariate in " + std::string(1, name(v)));
    c[static_cast<std::size_t>(e[static_cast<std::size_t>(v)])] += val;
  }
  return RationalPoly(c);
}

MPoly MPoly::from_univariate(const RationalPoly& p, int v) {
  MPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    Exponent e{0, 0, 0, 0};
    e[static_cast<std::size_t>(v)] = i;
    r.add_term(e, p.coeff(i));
  }
  return r;
}

FieldElement MPoly::evaluate(const std::array<FieldElement, kVars>& values) const {
  const FieldDescriptor& fd = values[0].field();
  FieldElement s = FieldElement::zero(fd);
  for (const auto& [e, c] : terms_) {
    FieldElement t = FieldElement::from_rational(fd, c);
    for (std::size_t i = 0; i < kVars; ++i)
      if (e[i] > 0) t *= values[i].pow(e[i]);
    s += t;
  }
  return s;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Rational>> order(terms_.begin(), terms_.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : order) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string mono;
    for (int v = 0; v < kVars; ++v) {
      const int k = e[static_cast<std::size_t>(v)];
      if (k == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += name(v);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace discarr
