#pragma once

// Exact arithmetic over the fields used for arrangement computations:
// Q, quadratic fields Q(sqrt d), prime fields F_p, small Galois fields
// F_p[x]/(f) and cyclotomic fields Q(zeta_m).
//
// Every element of a non-prime field is a polynomial in the generator `g`
// (sqrt d, zeta_m, or the class of x) reduced modulo the defining
// polynomial. Zero tests are exact.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discarr/errors.hpp"
#include "discarr/polynomial.hpp"

namespace discarr {

enum class FieldKind { kRational, kQuadratic, kPrime, kGalois, kCyclotomic };

namespace detail {
struct FieldContext;
}

class FieldDescriptor {
 public:
  /// Q. Also the default-constructed descriptor.
  FieldDescriptor();

  static FieldDescriptor rational();
  /// Q(sqrt d); d squarefree, d != 0, 1.
  static FieldDescriptor quadratic(long d);
  /// F_p for a prime p < 2^31.
  static FieldDescriptor prime(long p);
  /// F_p[x]/(modulus); modulus given low degree first, irreducible over F_p.
  static FieldDescriptor galois(long p, std::vector<long> modulus);
  /// Q(zeta_m), m >= 3, reduced modulo the m-th cyclotomic polynomial.
  static FieldDescriptor cyclotomic(int m);

  FieldKind kind() const;
  /// 0 for the number fields.
  long characteristic() const;
  /// Dimension over the prime field.
  int degree() const;
  long quadratic_d() const;
  int cyclotomic_m() const;
  /// Defining polynomial of a Galois field, low degree first, monic.
  const std::vector<long>& galois_modulus() const;
  /// Number of elements for finite fields.
  std::optional<std::int64_t> order() const;
  bool has_generator() const { return degree() > 1 || kind() == FieldKind::kQuadratic; }

  /// Short human-readable name: QQ, QQ(sqrt(5)), GF(5), GF(2^2), QQ(zeta_12).
  std::string name() const;

  bool operator==(const FieldDescriptor& o) const;
  bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

  const detail::FieldContext& context() const { return *ctx_; }

 private:
  explicit FieldDescriptor(std::shared_ptr<const detail::FieldContext> ctx);
  std::shared_ptr<const detail::FieldContext> ctx_;
};

class FieldElement {
 public:
  /// Zero of Q.
  FieldElement();

  static FieldElement zero(const FieldDescriptor& fd);
  static FieldElement one(const FieldDescriptor& fd);
  static FieldElement from_integer(const FieldDescriptor& fd, long v);
  /// Image of a rational. In characteristic p the denominator must be a unit.
  static FieldElement from_rational(const FieldDescriptor& fd, const Rational& v);
  /// The generator g of an extension field.
  static FieldElement generator(const FieldDescriptor& fd);
  /// Element with the given coordinates in the power basis 1, g, g^2, ...
  /// (reduced modulo the defining polynomial if longer than the degree).
  static FieldElement from_coefficients(const FieldDescriptor& fd, const std::vector<Rational>& c);

  const FieldDescriptor& field() const { return fd_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  /// Throws DivisionByZero on zero.
  FieldElement inverse() const;
  /// Negative exponents invert first.
  FieldElement pow(long e) const;

  /// Throws FieldMismatch when the descriptors differ.
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Coordinates over Q in the power basis (characteristic 0 only).
  std::vector<Rational> coefficients() const;
  /// Coordinates over F_p in the power basis (characteristic p only).
  const std::vector<std::int64_t>& residues() const { return res_; }

  /// Same as format_element.
  std::string to_string() const;

  /// Strict total order on the representation within one field; used to key
  /// maps and to sort, carries no algebraic meaning.
  friend bool representation_less(const FieldElement& a, const FieldElement& b);

 private:
  explicit FieldElement(FieldDescriptor fd);
  void check_same(const FieldElement& o) const;
  void normalize();

  FieldDescriptor fd_;
  // Characteristic 0: value = sum_i num_[i] g^i / den_, den_ > 0, coprime.
  std::vector<Integer> num_;
  Integer den_;
  // Characteristic p: residues in [0, p).
  std::vector<std::int64_t> res_;
};

/// The inclusion Q -> fd for a characteristic-0 descriptor.
FieldElement embed(const Rational& v, const FieldDescriptor& fd);

/// Parse `a`, `a/b`, or `c0 + c1*g + c2*g^2 + ...`. Whitespace is ignored.
FieldElement parse_element(std::string_view text, const FieldDescriptor& fd);
std::string format_element(const FieldElement& x);

/// Phi_m, low degree first, via exact division of x^m - 1 by Phi_d for the
/// proper divisors d of m.
std::vector<Integer> cyclotomic_polynomial(int m);

int euler_phi(int m);

/// Every element of a finite field, zero first. Throws TooLarge above `limit`
/// elements and InvalidField in characteristic 0.
std::vector<FieldElement> field_elements(const FieldDescriptor& fd, std::int64_t limit = 1000000);

}  // namespace discarr
