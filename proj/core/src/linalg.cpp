#include "discarr/linalg.hpp"

namespace discarr {

Matrix::Matrix(FieldDescriptor fd, std::size_t rows, std::size_t cols)
    : fd_(std::move(fd)), rows_(rows), cols_(cols), a_(rows * cols, FieldElement::zero(fd_)) {}

Matrix Matrix::identity(const FieldDescriptor& fd, std::size_t n) {
  Matrix m(fd, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(fd);
  return m;
}

Matrix Matrix::from_rows(const FieldDescriptor& fd, const std::vector<Vector>& rows) {
  if (rows.empty()) throw Error(ErrorCode::kDimensionMismatch, "matrix needs at least one row");
  Matrix m(fd, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::kDimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (rows[i][j].field() != fd) throw Error(ErrorCode::kFieldMismatch, "matrix entry from another field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const FieldDescriptor& fd, const std::vector<Vector>& cols) {
  return from_rows(fd, cols).transpose();
}

Vector Matrix::row(std::size_t i) const {
  return Vector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(fd_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::kDimensionMismatch, "matrix product shape");
  Matrix r(fd_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const FieldElement& a = (*this)(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(l, j);
    }
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw Error(ErrorCode::kDimensionMismatch, "matrix-vector shape");
  Vector r(rows_, FieldElement::zero(fd_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

namespace {

// Fraction-free elimination on an integer matrix (Bareiss).
Integer bareiss_det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

FieldElement det_rational(const Matrix& m) {
  const std::size_t n = m.rows();
  const FieldDescriptor& fd = m.field();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, Integer(m(i, j).coefficients()[0].get_den()));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational q = m(i, j).coefficients()[0];
      a[i][j] = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }
  return FieldElement::from_rational(fd, Rational(bareiss_det(std::move(a)), scale));
}

}  // namespace

FieldElement det(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kNotSquare, "det of a non-square matrix");
  const FieldDescriptor& fd = m.field();
  if (m.rows() == 0) return FieldElement::one(fd);
  if (fd.kind() == FieldKind::kRational) return det_rational(m);
  Matrix a = m;
  const std::size_t n = a.rows();
  FieldElement d = FieldElement::one(fd);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a(r, k).is_zero()) ++r;
    if (r == n) return FieldElement::zero(fd);
    if (r != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(r, j));
      d = -d;
    }
    d *= a(k, k);
    const FieldElement inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const FieldElement f = a(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

std::vector<std::size_t> rref(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const FieldElement inv = a(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const FieldElement f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  return rref(a).size();
}

std::size_t rank(const FieldDescriptor& fd, const std::vector<Vector>& rows) {
  if (rows.empty()) return 0;
  return rank(Matrix::from_rows(fd, rows));
}

std::vector<Vector> kernel(const Matrix& m) {
  Matrix a = m;
  const auto pivots = rref(a);
  const FieldDescriptor& fd = m.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(fd, a.cols());
    v[f] = FieldElement::one(fd);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::kDimensionMismatch, "right-hand side length");
  const FieldDescriptor& fd = m.field();
  Matrix aug(fd, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  SolveResult out;
  out.kernel = kernel(m);
  if (!pivots.empty() && pivots.back() == m.cols()) return out;
  Vector x = zero_vector(fd, m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  out.particular = std::move(x);
  return out;
}

FieldElement dot(const Vector& u, const Vector& v) {
  if (u.size() != v.size() || u.empty()) throw Error(ErrorCode::kDimensionMismatch, "dot product lengths");
  FieldElement s = FieldElement::zero(u[0].field());
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

Vector cross3(const Vector& u, const Vector& v) {
  if (u.size() != 3 || v.size() != 3) throw Error(ErrorCode::kDimensionMismatch, "cross3 needs 3-vectors");
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vector zero_vector(const FieldDescriptor& fd, std::size_t n) { return Vector(n, FieldElement::zero(fd)); }

Vector scaled(const Vector& v, const FieldElement& c) {
  Vector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x * c);
  return r;
}

Vector add(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::kDimensionMismatch, "vector lengths");
  Vector r;
  r.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r.push_back(u[i] + v[i]);
  return r;
}

Vector sub(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::kDimensionMismatch, "vector lengths");
  Vector r;
  r.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r.push_back(u[i] - v[i]);
  return r;
}

RowSpace::RowSpace(FieldDescriptor fd, std::size_t dim) : fd_(std::move(fd)), dim_(dim) {}

Vector RowSpace::reduce(Vector v) const {
  if (v.size() != dim_) throw Error(ErrorCode::kDimensionMismatch, "row space dimension");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const FieldElement c = v[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!basis_[i][j].is_zero()) v[j] -= c * basis_[i][j];
  }
  return v;
}

bool RowSpace::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

bool RowSpace::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  const FieldElement inv = r[p].inverse();
  for (auto& x : r) x *= inv;
  basis_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace discarr
