#include "discarr/arrangement.hpp"

#include <algorithm>
#include <cmath>

#include "discarr/discriminantal.hpp"

namespace discarr {

Arrangement::Arrangement(FieldDescriptor fd, std::size_t k, std::vector<Vector> normals)
    : fd_(std::move(fd)), k_(k), normals_(std::move(normals)) {
  if (k_ < 1 || normals_.size() <= k_)
    throw Error(ErrorCode::kDimensionMismatch,
                "arrangement needs n > k >= 1 (n=" + std::to_string(normals_.size()) +
                    ", k=" + std::to_string(k_) + ")");
  for (const auto& v : normals_) {
    if (v.size() != k_) throw Error(ErrorCode::kDimensionMismatch, "normal of wrong length");
    for (const auto& x : v)
      if (x.field() != fd_) throw Error(ErrorCode::kFieldMismatch, "normal entry from another field");
  }
}

Arrangement Arrangement::restrict_to(const IndexSet& idx) const {
  std::vector<Vector> sub;
  for (int p : idx) sub.push_back(normal(p));
  return Arrangement(fd_, k_, std::move(sub));
}

std::vector<IndexSet> subsets_of(const IndexSet& from, int k) {
  std::vector<IndexSet> out;
  const int n = static_cast<int>(from.size());
  if (k < 0 || k > n) return out;
  std::vector<int> pos(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(i)] = i;
  while (true) {
    IndexSet s;
    for (int i : pos) s.push_back(from[static_cast<std::size_t>(i)]);
    out.push_back(std::move(s));
    int i = k - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<IndexSet> subsets(int n, int k) {
  IndexSet all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  return subsets_of(all, k);
}

bool is_generic(const Arrangement& a) {
  const int k = static_cast<int>(a.k());
  for (const auto& s : subsets(static_cast<int>(a.n()), k)) {
    std::vector<Vector> cols;
    for (int p : s) cols.push_back(a.normal(p));
    if (det(Matrix::from_rows(a.field(), cols)).is_zero()) return false;
  }
  return true;
}

FieldElement det2(const Vector& u, const Vector& v) {
  if (u.size() != 2 || v.size() != 2) throw Error(ErrorCode::kDimensionMismatch, "det2 needs 2-vectors");
  return u[0] * v[1] - u[1] * v[0];
}

FieldElement cross_ratio(const Vector& v1, const Vector& v2, const Vector& v3, const Vector& v4) {
  const FieldElement d13 = det2(v1, v3), d24 = det2(v2, v4), d23 = det2(v2, v3), d14 = det2(v1, v4);
  if (d23.is_zero() || d14.is_zero() || d13.is_zero() || d24.is_zero() || det2(v1, v2).is_zero() ||
      det2(v3, v4).is_zero())
    throw Error(ErrorCode::kDegeneratePoints, "cross ratio of coincident points");
  return d13 * d24 / (d23 * d14);
}

Vector projective_normalize(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return scaled(v, x.inverse());
  return v;
}

bool projectively_equal(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) return false;
  return projective_normalize(u) == projective_normalize(v) && !is_zero_vector(u);
}

ProjectiveMap::ProjectiveMap(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorCode::kNotSquare, "projective map must be square");
  if (det(m_).is_zero()) throw Error(ErrorCode::kDegeneratePoints, "projective map is singular");
}

ProjectiveMap ProjectiveMap::inverse() const {
  const std::size_t n = m_.rows();
  const FieldDescriptor& fd = m_.field();
  Matrix aug(fd, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m_(i, j);
    aug(i, n + i) = FieldElement::one(fd);
  }
  rref(aug);
  Matrix inv(fd, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return ProjectiveMap(std::move(inv));
}

bool ProjectiveMap::is_identity() const {
  return *this == ProjectiveMap(Matrix::identity(m_.field(), m_.rows()));
}

bool ProjectiveMap::operator==(const ProjectiveMap& o) const {
  if (m_.rows() != o.m_.rows()) return false;
  Vector a, b;
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      a.push_back(m_(i, j));
      b.push_back(o.m_(i, j));
    }
  return projectively_equal(a, b);
}

namespace {

// The map sending e1, e2, e1+e2 to p[0], p[1], p[2].
Matrix frame_matrix(const std::array<Vector, 3>& p) {
  const FieldElement d = det2(p[0], p[1]);
  const FieldElement a = det2(p[2], p[1]) / d;
  const FieldElement b = det2(p[0], p[2]) / d;
  return Matrix::from_columns(d.field(), {scaled(p[0], a), scaled(p[1], b)});
}

void check_distinct(const std::array<Vector, 3>& p) {
  for (const auto& v : p)
    if (v.size() != 2) throw Error(ErrorCode::kDimensionMismatch, "points of P^1 are 2-vectors");
  if (det2(p[0], p[1]).is_zero() || det2(p[0], p[2]).is_zero() || det2(p[1], p[2]).is_zero())
    throw Error(ErrorCode::kDegeneratePoints, "three points of P^1 must be distinct");
}

}  // namespace

ProjectiveMap projective_map_through(const std::array<Vector, 3>& src, const std::array<Vector, 3>& dst) {
  check_distinct(src);
  check_distinct(dst);
  const ProjectiveMap to_src(frame_matrix(src));
  const ProjectiveMap to_dst(frame_matrix(dst));
  return to_dst.compose(to_src.inverse());
}

IndexFamily::IndexFamily(std::vector<IndexSet> sets) : sets_(std::move(sets)) {
  for (auto& s : sets_) std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < sets_.size(); ++i)
    for (std::size_t j = 0; j < sets_.size(); ++j) {
      if (i == j) continue;
      if (std::includes(sets_[j].begin(), sets_[j].end(), sets_[i].begin(), sets_[i].end()))
        throw Error(ErrorCode::kInvalidArgument, "index family has a set contained in another");
    }
}

namespace {

// Coefficient vectors c (over the kernel basis) tried in order; stops at the
// first one for which every forbidden functional is nonzero.
class WitnessSearch {
 public:
  WitnessSearch(const FieldDescriptor& fd, std::vector<Vector> values)
      : fd_(fd), values_(std::move(values)) {}

  bool accept(const Vector& c) const {
    for (const auto& row : values_)
      if (dot(row, c).is_zero()) return false;
    return true;
  }

  std::optional<Vector> run(std::size_t dim) const {
    if (fd_.characteristic() == 0) return run_infinite(dim);
    return run_finite(dim);
  }

 private:
  Vector unit(std::size_t dim, std::size_t i) const {
    Vector c = zero_vector(fd_, dim);
    c[i] = FieldElement::one(fd_);
    return c;
  }

  // Points s -> (1, s, s^2, ...) on the moment curve: a functional that is
  // nonzero on the kernel vanishes at no more than dim-1 of them.
  Vector moment(std::size_t dim, const FieldElement& s) const {
    Vector c;
    FieldElement p = FieldElement::one(fd_);
    for (std::size_t i = 0; i < dim; ++i) {
      c.push_back(p);
      p *= s;
    }
    return c;
  }

  std::optional<Vector> run_infinite(std::size_t dim) const {
    for (std::size_t i = 0; i < dim; ++i)
      if (Vector c = unit(dim, i); accept(c)) return c;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        for (long a = -8; a <= 8; ++a)
          for (long b = -8; b <= 8; ++b) {
            if (a == 0 || b == 0) continue;
            Vector c = zero_vector(fd_, dim);
            c[i] = FieldElement::from_integer(fd_, a);
            c[j] = FieldElement::from_integer(fd_, b);
            if (accept(c)) return c;
          }
    const long bound = static_cast<long>(values_.size() * dim) + 1;
    for (long s = 1; s <= bound; ++s)
      if (Vector c = moment(dim, FieldElement::from_integer(fd_, s)); accept(c)) return c;
    return std::nullopt;
  }

  std::optional<Vector> run_finite(std::size_t dim) const {
    const auto elems = field_elements(fd_);
    const double size = std::pow(static_cast<double>(elems.size()), static_cast<double>(dim));
    if (size <= 1e6) {
      std::vector<std::size_t> digit(dim, 0);
      while (true) {
        std::size_t i = 0;
        while (i < dim && ++digit[i] == elems.size()) digit[i++] = 0;
        if (i == dim) break;
        Vector c;
        for (auto d : digit) c.push_back(elems[d]);
        if (accept(c)) return c;
      }
      return std::nullopt;
    }
    for (const auto& s : elems)
      if (Vector c = moment(dim, s); accept(c)) return c;
    return std::nullopt;
  }

  const FieldDescriptor& fd_;
  std::vector<Vector> values_;
};

}  // namespace

std::optional<Vector> translate_solver(const Arrangement& a, const IndexFamily& family) {
  if (!is_generic(a)) throw Error(ErrorCode::kNotGeneric, "translate_solver needs a generic arrangement");
  const FieldDescriptor& fd = a.field();
  const std::size_t k = a.k();
  const int n = static_cast<int>(a.n());

  std::vector<Vector> rows, forbidden;
  for (const auto& L : family.sets()) {
    if (L.size() < k + 1) throw Error(ErrorCode::kBadSubsetSize, "index sets need at least k+1 elements");
    if (L.front() < 1 || L.back() > n) throw Error(ErrorCode::kBadSubsetSize, "index out of range");
    const IndexSet head(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(k));
    for (int q = 1; q <= n; ++q) {
      if (std::binary_search(head.begin(), head.end(), q)) continue;
      IndexSet s = head;
      s.insert(std::upper_bound(s.begin(), s.end(), q), q);
      const bool inside = std::binary_search(L.begin(), L.end(), q);
      (inside ? rows : forbidden).push_back(discriminantal_normal(a, s));
    }
  }

  std::vector<Vector> basis;
  if (rows.empty()) {
    for (int i = 0; i < n; ++i) {
      Vector e = zero_vector(fd, static_cast<std::size_t>(n));
      e[static_cast<std::size_t>(i)] = FieldElement::one(fd);
      basis.push_back(std::move(e));
    }
  } else {
    basis = kernel(Matrix::from_rows(fd, rows));
  }

  // values[f][j] = forbidden_f . basis_j
  std::vector<Vector> values;
  for (const auto& f : forbidden) {
    Vector row;
    for (const auto& b : basis) row.push_back(dot(f, b));
    if (is_zero_vector(row)) return std::nullopt;
    values.push_back(std::move(row));
  }
  if (basis.empty()) return std::nullopt;

  const auto c = WitnessSearch(fd, std::move(values)).run(basis.size());
  if (!c)
    throw Error(ErrorCode::kNoGenericWitness,
                "every translate in the solution space meets an extra hyperplane over " + fd.name());
  Vector t = zero_vector(fd, static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < basis.size(); ++j) t = add(t, scaled(basis[j], (*c)[j]));
  return t;
}

}  // namespace discarr
