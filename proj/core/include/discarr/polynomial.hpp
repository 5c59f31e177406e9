#pragma once

// Dense univariate polynomials over Q and over small prime fields. These back
// the number-field reductions in exactfield and the univariate end game of the
// classification solver.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace discarr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Polynomial with rational coefficients, stored low degree first and kept
/// trimmed (no trailing zeros; the zero polynomial is empty).
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly from_integers(const std::vector<Integer>& coeffs);
  static RationalPoly monomial(const Rational& c, int degree);
  static RationalPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly operator*(const Rational& s) const;
  RationalPoly operator-() const;
  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const;
  RationalPoly monic() const;
  Rational evaluate(const Rational& x) const;

  /// Integer multiple with coprime integer coefficients and positive leading
  /// coefficient.
  std::vector<Integer> primitive_integer() const;

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

/// s with s*a == 1 mod m, for a coprime to m. Throws DivisionByZero when a
/// is not invertible modulo m.
RationalPoly inverse_mod(const RationalPoly& a, const RationalPoly& m);

/// All rational roots (without multiplicity), ascending.
std::vector<Rational> rational_roots(const RationalPoly& p);

/// Divide out every linear factor over Q (with multiplicity). Returns the
/// rational roots found (with multiplicity) and the cofactor.
std::pair<std::vector<Rational>, RationalPoly> split_rational_roots(const RationalPoly& p);

/// Irreducibility over Q for degree <= 3 (no rational root suffices there).
/// Degree 4 is decided by rational roots plus an exhaustive search for a
/// quadratic factorisation with integer coefficients. Throws InvalidArgument
/// above degree 4.
bool is_irreducible_over_q(const RationalPoly& p);

// Arithmetic in F_p[x]. Vectors are low degree first and trimmed.
namespace modp {

using Poly = std::vector<std::int64_t>;

std::int64_t reduce(std::int64_t a, std::int64_t p);
std::int64_t inverse(std::int64_t a, std::int64_t p);
void trim(Poly& a);
Poly mul(const Poly& a, const Poly& b, std::int64_t p);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::int64_t p);
Poly inverse_mod(const Poly& a, const Poly& m, std::int64_t p);
bool is_irreducible(const Poly& f, std::int64_t p);

}  // namespace modp

}  // namespace discarr
