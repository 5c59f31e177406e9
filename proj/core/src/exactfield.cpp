#include "discarr/exactfield.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace discarr {

namespace detail {

struct FieldContext {
  FieldKind kind = FieldKind::kRational;
  long param = 0;  // d, p or m depending on kind
  long characteristic = 0;
  int degree = 1;
  // Monic defining polynomial, low degree first. Q and F_p use x.
  std::vector<Integer> modulus_z;
  std::vector<std::int64_t> modulus_p;
  std::vector<long> galois_modulus;
};

}  // namespace detail

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kInvalidField: return "InvalidField";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDegeneratePoints: return "DegeneratePoints";
    case ErrorCode::kNotGeneric: return "NotGeneric";
    case ErrorCode::kNoGenericWitness: return "NoGenericWitness";
    case ErrorCode::kBadSubsetSize: return "BadSubsetSize";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kExhaustedRetries: return "ExhaustedRetries";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kBadFourSet: return "BadFourSet";
    case ErrorCode::kNotDimension3: return "NotDimension3";
    case ErrorCode::kTooFewHyperplanes: return "TooFewHyperplanes";
    case ErrorCode::kClosureViolation: return "ClosureViolation";
    case ErrorCode::kNotAMatchingLabel: return "NotAMatchingLabel";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long i = 2; i * i <= p; ++i)
    if (p % i == 0) return false;
  return true;
}

bool is_squarefree(long d) {
  long a = d < 0 ? -d : d;
  for (long i = 2; i * i <= a; ++i)
    if (a % (i * i) == 0) return false;
  return true;
}

}  // namespace

int euler_phi(int m) {
  int result = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(int m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "cyclotomic_polynomial needs m >= 1");
  std::vector<Rational> xm(static_cast<std::size_t>(m) + 1, Rational(0));
  xm[0] = -1;
  xm.back() = 1;
  RationalPoly acc(std::move(xm));
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto [q, r] = acc.divmod(RationalPoly::from_integers(cyclotomic_polynomial(d)));
    if (!r.is_zero()) throw Error(ErrorCode::kInvalidArgument, "inexact cyclotomic division");
    acc = std::move(q);
  }
  std::vector<Integer> out;
  for (const auto& c : acc.coeffs()) out.push_back(c.get_num());
  return out;
}

// ---------------------------------------------------------------------------
// FieldDescriptor

FieldDescriptor::FieldDescriptor() : FieldDescriptor(rational()) {}

FieldDescriptor::FieldDescriptor(std::shared_ptr<const detail::FieldContext> ctx)
    : ctx_(std::move(ctx)) {}

FieldDescriptor FieldDescriptor::rational() {
  static const auto ctx = [] {
    auto c = std::make_shared<detail::FieldContext>();
    c->kind = FieldKind::kRational;
    c->modulus_z = {0, 1};
    return c;
  }();
  return FieldDescriptor(ctx);
}

FieldDescriptor FieldDescriptor::quadratic(long d) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw Error(ErrorCode::kInvalidField, "quadratic field needs squarefree d != 0, 1; got " + std::to_string(d));
  auto c = std::make_shared<detail::FieldContext>();
  c->kind = FieldKind::kQuadratic;
  c->param = d;
  c->degree = 2;
  c->modulus_z = {Integer(-d), 0, 1};
  return FieldDescriptor(c);
}

FieldDescriptor FieldDescriptor::prime(long p) {
  if (!is_prime(p) || p >= (1L << 31))
    throw Error(ErrorCode::kInvalidField, "prime field needs a prime p < 2^31; got " + std::to_string(p));
  auto c = std::make_shared<detail::FieldContext>();
  c->kind = FieldKind::kPrime;
  c->param = p;
  c->characteristic = p;
  c->modulus_p = {0, 1};
  return FieldDescriptor(c);
}

FieldDescriptor FieldDescriptor::galois(long p, std::vector<long> modulus) {
  if (!is_prime(p) || p >= (1L << 31))
    throw Error(ErrorCode::kInvalidField, "galois field needs a prime p < 2^31");
  modp::Poly f;
  for (long v : modulus) f.push_back(modp::reduce(v, p));
  modp::trim(f);
  if (f.size() < 2) throw Error(ErrorCode::kInvalidField, "galois modulus must have degree >= 1");
  const std::int64_t inv = modp::inverse(f.back(), p);
  for (auto& v : f) v = v * inv % p;
  if (!modp::is_irreducible(f, p))
    throw Error(ErrorCode::kInvalidField, "galois modulus is reducible over F_" + std::to_string(p));
  auto c = std::make_shared<detail::FieldContext>();
  c->kind = FieldKind::kGalois;
  c->param = p;
  c->characteristic = p;
  c->degree = static_cast<int>(f.size()) - 1;
  c->modulus_p = f;
  c->galois_modulus.assign(f.begin(), f.end());
  return FieldDescriptor(c);
}

FieldDescriptor FieldDescriptor::cyclotomic(int m) {
  if (m < 3) throw Error(ErrorCode::kInvalidField, "cyclotomic field needs m >= 3");
  auto c = std::make_shared<detail::FieldContext>();
  c->kind = FieldKind::kCyclotomic;
  c->param = m;
  c->modulus_z = cyclotomic_polynomial(m);
  c->degree = static_cast<int>(c->modulus_z.size()) - 1;
  return FieldDescriptor(c);
}

FieldKind FieldDescriptor::kind() const { return ctx_->kind; }
long FieldDescriptor::characteristic() const { return ctx_->characteristic; }
int FieldDescriptor::degree() const { return ctx_->degree; }

long FieldDescriptor::quadratic_d() const {
  if (kind() != FieldKind::kQuadratic) throw Error(ErrorCode::kInvalidField, "not a quadratic field");
  return ctx_->param;
}

int FieldDescriptor::cyclotomic_m() const {
  if (kind() != FieldKind::kCyclotomic) throw Error(ErrorCode::kInvalidField, "not a cyclotomic field");
  return static_cast<int>(ctx_->param);
}

const std::vector<long>& FieldDescriptor::galois_modulus() const { return ctx_->galois_modulus; }

std::optional<std::int64_t> FieldDescriptor::order() const {
  if (characteristic() == 0) return std::nullopt;
  std::int64_t q = 1;
  for (int i = 0; i < degree(); ++i) q *= characteristic();
  return q;
}

std::string FieldDescriptor::name() const {
  switch (kind()) {
    case FieldKind::kRational: return "QQ";
    case FieldKind::kQuadratic: return "QQ(sqrt(" + std::to_string(ctx_->param) + "))";
    case FieldKind::kPrime: return "GF(" + std::to_string(ctx_->param) + ")";
    case FieldKind::kGalois:
      return "GF(" + std::to_string(ctx_->param) + "^" + std::to_string(ctx_->degree) + ")";
    case FieldKind::kCyclotomic: return "QQ(zeta_" + std::to_string(ctx_->param) + ")";
  }
  return "?";
}

bool FieldDescriptor::operator==(const FieldDescriptor& o) const {
  if (ctx_ == o.ctx_) return true;
  return ctx_->kind == o.ctx_->kind && ctx_->param == o.ctx_->param &&
         ctx_->galois_modulus == o.ctx_->galois_modulus;
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

// Reduce a coefficient vector modulo the monic integer polynomial f in place
// and shrink it to deg(f) entries.
void reduce_z(std::vector<Integer>& v, const std::vector<Integer>& f) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t j = v.size(); j-- > deg;) {
    if (v[j] == 0) continue;
    const Integer c = v[j];
    v[j] = 0;
    for (std::size_t i = 0; i < deg; ++i)
      if (f[i] != 0) v[j - deg + i] -= c * f[i];
  }
  v.resize(deg, Integer(0));
}

void reduce_p(std::vector<std::int64_t>& v, const std::vector<std::int64_t>& f, std::int64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t j = v.size(); j-- > deg;) {
    const std::int64_t c = v[j] % p;
    v[j] = 0;
    if (c == 0) continue;
    for (std::size_t i = 0; i < deg; ++i)
      v[j - deg + i] = modp::reduce(v[j - deg + i] - c * f[i], p);
  }
  v.resize(deg, 0);
  for (auto& x : v) x = modp::reduce(x, p);
}

}  // namespace

FieldElement::FieldElement() : FieldElement(zero(FieldDescriptor::rational())) {}

FieldElement::FieldElement(FieldDescriptor fd) : fd_(std::move(fd)) {
  const auto deg = static_cast<std::size_t>(fd_.degree());
  if (fd_.characteristic() == 0) {
    num_.assign(deg, Integer(0));
    den_ = 1;
  } else {
    res_.assign(deg, 0);
  }
}

FieldElement FieldElement::zero(const FieldDescriptor& fd) { return FieldElement(fd); }

FieldElement FieldElement::one(const FieldDescriptor& fd) { return from_integer(fd, 1); }

FieldElement FieldElement::from_integer(const FieldDescriptor& fd, long v) {
  FieldElement e(fd);
  if (fd.characteristic() == 0)
    e.num_[0] = v;
  else
    e.res_[0] = modp::reduce(v, fd.characteristic());
  return e;
}

FieldElement FieldElement::from_rational(const FieldDescriptor& fd, const Rational& v) {
  FieldElement e(fd);
  if (fd.characteristic() == 0) {
    e.num_[0] = v.get_num();
    e.den_ = v.get_den();
    e.normalize();
  } else {
    const long p = fd.characteristic();
    const Integer pz(p);
    const std::int64_t num = Integer(Integer(v.get_num() % pz + pz) % pz).get_si();
    const std::int64_t den = Integer(Integer(v.get_den() % pz + pz) % pz).get_si();
    e.res_[0] = num * modp::inverse(den, p) % p;
  }
  return e;
}

FieldElement FieldElement::generator(const FieldDescriptor& fd) {
  if (!fd.has_generator()) throw Error(ErrorCode::kInvalidField, fd.name() + " has no generator g");
  FieldElement e(fd);
  if (fd.characteristic() == 0)
    e.num_[1] = 1;
  else
    e.res_[1] = 1;
  return e;
}

FieldElement FieldElement::from_coefficients(const FieldDescriptor& fd, const std::vector<Rational>& c) {
  FieldElement e(fd);
  if (c.empty()) return e;
  if (fd.characteristic() == 0) {
    Integer den = 1;
    for (const auto& v : c) den = lcm(den, Integer(v.get_den()));
    std::vector<Integer> num;
    num.reserve(c.size());
    for (const auto& v : c) num.push_back(v.get_num() * (den / v.get_den()));
    if (num.size() < e.num_.size()) num.resize(e.num_.size(), Integer(0));
    reduce_z(num, fd.context().modulus_z);
    e.num_ = std::move(num);
    e.den_ = den;
    e.normalize();
  } else {
    const long p = fd.characteristic();
    std::vector<std::int64_t> r;
    for (const auto& v : c) r.push_back(from_rational(FieldDescriptor::prime(p), v).res_[0]);
    if (r.size() < e.res_.size()) r.resize(e.res_.size(), 0);
    reduce_p(r, fd.context().modulus_p, p);
    e.res_ = std::move(r);
  }
  return e;
}

void FieldElement::normalize() {
  Integer g = den_;
  for (const auto& v : num_) {
    if (g == 1) break;
    g = gcd(g, v);
  }
  if (den_ < 0) g = -g;
  if (g != 1) {
    for (auto& v : num_) v /= g;
    den_ /= g;
  }
}

void FieldElement::check_same(const FieldElement& o) const {
  if (fd_ != o.fd_)
    throw Error(ErrorCode::kFieldMismatch, "field mismatch: " + fd_.name() + " vs " + o.fd_.name());
}

bool FieldElement::is_zero() const {
  if (fd_.characteristic() == 0)
    return std::all_of(num_.begin(), num_.end(), [](const Integer& v) { return v == 0; });
  return std::all_of(res_.begin(), res_.end(), [](std::int64_t v) { return v == 0; });
}

bool FieldElement::is_one() const {
  if (fd_.characteristic() == 0) {
    if (num_[0] != den_) return false;
    return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& v) { return v == 0; });
  }
  if (res_[0] != 1) return false;
  return std::all_of(res_.begin() + 1, res_.end(), [](std::int64_t v) { return v == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  FieldElement r(fd_);
  if (fd_.characteristic() == 0) {
    if (den_ == o.den_) {
      for (std::size_t i = 0; i < num_.size(); ++i) r.num_[i] = num_[i] + o.num_[i];
      r.den_ = den_;
    } else {
      for (std::size_t i = 0; i < num_.size(); ++i) r.num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
      r.den_ = den_ * o.den_;
    }
    r.normalize();
  } else {
    const long p = fd_.characteristic();
    for (std::size_t i = 0; i < res_.size(); ++i) r.res_[i] = (res_[i] + o.res_[i]) % p;
  }
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r(*this);
  if (fd_.characteristic() == 0) {
    for (auto& v : r.num_) v = -v;
  } else {
    const long p = fd_.characteristic();
    for (auto& v : r.res_) v = (p - v) % p;
  }
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  FieldElement r(fd_);
  const std::size_t deg = static_cast<std::size_t>(fd_.degree());
  if (fd_.characteristic() == 0) {
    if (deg == 1) {
      r.num_[0] = num_[0] * o.num_[0];
    } else {
      std::vector<Integer> prod(2 * deg - 1, Integer(0));
      for (std::size_t i = 0; i < deg; ++i) {
        if (num_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j)
          if (o.num_[j] != 0) prod[i + j] += num_[i] * o.num_[j];
      }
      reduce_z(prod, fd_.context().modulus_z);
      r.num_ = std::move(prod);
    }
    r.den_ = den_ * o.den_;
    r.normalize();
  } else {
    const long p = fd_.characteristic();
    std::vector<std::int64_t> prod(2 * deg - 1, 0);
    for (std::size_t i = 0; i < deg; ++i)
      for (std::size_t j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + res_[i] * o.res_[j]) % p;
    reduce_p(prod, fd_.context().modulus_p, p);
    r.res_ = std::move(prod);
  }
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero in " + fd_.name());
  FieldElement r(fd_);
  const auto& ctx = fd_.context();
  if (fd_.characteristic() == 0) {
    if (fd_.degree() == 1) {
      r.num_[0] = den_;
      r.den_ = num_[0];
      r.normalize();
      return r;
    }
    if (ctx.kind == FieldKind::kQuadratic) {
      // (a + b g)^-1 = (a - b g) / (a^2 - d b^2), scaled by den.
      const Integer norm = num_[0] * num_[0] - Integer(ctx.param) * num_[1] * num_[1];
      r.num_[0] = num_[0] * den_;
      r.num_[1] = -num_[1] * den_;
      r.den_ = norm;
      r.normalize();
      return r;
    }
    std::vector<Rational> a;
    for (const auto& v : num_) a.emplace_back(v);
    const RationalPoly inv = inverse_mod(RationalPoly(a), RationalPoly::from_integers(ctx.modulus_z));
    std::vector<Rational> c = inv.coeffs();
    for (auto& v : c) v *= den_;
    return from_coefficients(fd_, c);
  }
  const long p = fd_.characteristic();
  if (fd_.degree() == 1) {
    r.res_[0] = modp::inverse(res_[0], p);
    return r;
  }
  modp::Poly a = res_;
  modp::trim(a);
  modp::Poly inv = modp::inverse_mod(a, ctx.modulus_p, p);
  inv.resize(res_.size(), 0);
  r.res_ = std::move(inv);
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return *this * o.inverse();
}

FieldElement FieldElement::pow(long e) const {
  FieldElement base = e < 0 ? inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElement acc = one(fd_);
  while (n > 0) {
    if (n & 1UL) acc *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  if (fd_.characteristic() == 0) return den_ == o.den_ && num_ == o.num_;
  return res_ == o.res_;
}

std::vector<Rational> FieldElement::coefficients() const {
  if (fd_.characteristic() != 0) throw Error(ErrorCode::kInvalidField, "coefficients() needs characteristic 0");
  std::vector<Rational> c;
  for (const auto& v : num_) {
    Rational q(v, den_);
    q.canonicalize();
    c.push_back(q);
  }
  return c;
}

bool representation_less(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  if (a.fd_.characteristic() != 0) return a.res_ < b.res_;
  if (a.den_ != b.den_) return a.den_ < b.den_;
  return a.num_ < b.num_;
}

std::string FieldElement::to_string() const { return format_element(*this); }

FieldElement embed(const Rational& v, const FieldDescriptor& fd) {
  if (fd.characteristic() != 0)
    throw Error(ErrorCode::kFieldMismatch, "cannot embed Q into " + fd.name());
  return FieldElement::from_rational(fd, v);
}

std::vector<FieldElement> field_elements(const FieldDescriptor& fd, std::int64_t limit) {
  const auto q = fd.order();
  if (!q) throw Error(ErrorCode::kInvalidField, fd.name() + " is infinite");
  if (*q > limit) throw Error(ErrorCode::kTooLarge, fd.name() + " has too many elements to list");
  const long p = fd.characteristic();
  std::vector<FieldElement> out;
  out.reserve(static_cast<std::size_t>(*q));
  std::vector<Rational> digits(static_cast<std::size_t>(fd.degree()), Rational(0));
  for (std::int64_t idx = 0; idx < *q; ++idx) {
    std::int64_t r = idx;
    for (auto& d : digits) {
      d = r % p;
      r /= p;
    }
    out.push_back(FieldElement::from_coefficients(fd, digits));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view s, const FieldDescriptor& fd) : s_(s), fd_(fd) {}

  FieldElement parse() {
    std::map<long, Rational> terms;
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError(pos_, "empty element");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      first = false;
      auto [coef, power] = term();
      terms[power] += coef * sign;
    }
    long max_power = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Rational> c(static_cast<std::size_t>(max_power) + 1, Rational(0));
    for (const auto& [pw, v] : terms) c[static_cast<std::size_t>(pw)] += v;
    return FieldElement::from_coefficients(fd_, c);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(start, "expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  long power() {
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    const std::size_t at = pos_;
    Integer e = integer();
    if (e > 100000) throw ParseError(at, "exponent too large");
    return e.get_si();
  }

  std::pair<Rational, long> term() {
    skip_ws();
    if (peek() == 'g') return {Rational(1), generator()};
    Integer num = integer();
    Integer den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      den = integer();
      if (den == 0) throw ParseError(at, "zero denominator");
    }
    Rational c(num, den);
    c.canonicalize();
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      if (peek() != 'g') throw ParseError(pos_, "expected generator 'g' after '*'");
      return {c, generator()};
    }
    return {c, 0};
  }

  long generator() {
    if (!fd_.has_generator()) throw ParseError(pos_, "field " + fd_.name() + " has no generator 'g'");
    ++pos_;
    return power();
  }

  std::string_view s_;
  const FieldDescriptor& fd_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_element(std::string_view text, const FieldDescriptor& fd) {
  return ElementParser(text, fd).parse();
}

std::string format_element(const FieldElement& x) {
  const FieldDescriptor& fd = x.field();
  std::vector<Rational> c;
  if (fd.characteristic() == 0) {
    c = x.coefficients();
  } else {
    for (auto v : x.residues()) c.emplace_back(v);
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Rational v = c[i];
    const bool neg = v < 0;
    if (neg) v = -v;
    if (neg)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (i == 0) {
      os << v.get_str();
      continue;
    }
    if (v != 1) os << v.get_str() << '*';
    os << 'g';
    if (i > 1) os << '^' << i;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace discarr
