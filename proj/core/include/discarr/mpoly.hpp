#pragma once

// Sparse polynomials over Q in the four parameters w, x, y, z of the
// six-plane normal form used by the classification solver.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "discarr/exactfield.hpp"
#include "discarr/polynomial.hpp"

namespace discarr {

class MPoly {
 public:
  static constexpr int kVars = 4;
  enum Var { kW = 0, kX = 1, kY = 2, kZ = 3 };
  using Exponent = std::array<int, kVars>;

  MPoly() = default;
  static MPoly constant(const Rational& c);
  static MPoly var(int v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term; for a constant polynomial its value.
  Rational constant_term() const;
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rational& c) const;
  MPoly operator-() const;
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  int degree_in(int v) const;
  /// The coefficient of v^power, as a polynomial in the other variables.
  MPoly coefficient(int v, int power) const;
  MPoly substitute(int v, const MPoly& value) const;
  std::vector<int> variables() const;
  /// Requires every variable other than v to be absent.
  RationalPoly to_univariate(int v) const;
  static MPoly from_univariate(const RationalPoly& p, int v);
  FieldElement evaluate(const std::array<FieldElement, kVars>& values) const;

  static char name(int v) { return "wxyz"[v]; }
  /// Descending graded order, e.g. "w*z - x*y - w + x".
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

}  // namespace discarr
