#pragma once

// Central arrangements given by their normal vectors. Hyperplane p of a
// translate A^t is {x : alpha_p . x = t_p}; indices are 1-based throughout.

#include <array>
#include <optional>
#include <vector>

#include "discarr/linalg.hpp"

namespace discarr {

using IndexSet = std::vector<int>;  // sorted, 1-based

class Arrangement {
 public:
  /// normals[p-1] is alpha_p; requires n > k >= 1 and every normal of length k.
  Arrangement(FieldDescriptor fd, std::size_t k, std::vector<Vector> normals);

  const FieldDescriptor& field() const { return fd_; }
  std::size_t k() const { return k_; }
  std::size_t n() const { return normals_.size(); }
  const Vector& normal(int p) const { return normals_.at(static_cast<std::size_t>(p - 1)); }
  const std::vector<Vector>& normals() const { return normals_; }

  /// Sub-arrangement on the given indices, relabelled 1..|idx| in order.
  Arrangement restrict_to(const IndexSet& idx) const;

 private:
  FieldDescriptor fd_;
  std::size_t k_;
  std::vector<Vector> normals_;
};

bool is_generic(const Arrangement& a);

/// |u v| for 2-vectors.
FieldElement det2(const Vector& u, const Vector& v);

/// [v1,v2;v3,v4] = |v1 v3||v2 v4| / |v2 v3||v1 v4|. Throws DegeneratePoints
/// when two of the points coincide projectively.
FieldElement cross_ratio(const Vector& v1, const Vector& v2, const Vector& v3, const Vector& v4);

/// Scale so the first nonzero coordinate is 1. For display and hashing.
Vector projective_normalize(const Vector& v);
bool projectively_equal(const Vector& u, const Vector& v);

class ProjectiveMap {
 public:
  explicit ProjectiveMap(Matrix m);

  const Matrix& matrix() const { return m_; }
  Vector apply(const Vector& v) const { return m_ * v; }
  ProjectiveMap compose(const ProjectiveMap& right) const { return ProjectiveMap(m_ * right.m_); }
  ProjectiveMap inverse() const;
  bool is_identity() const;
  /// Equality up to a nonzero scalar.
  bool operator==(const ProjectiveMap& o) const;

 private:
  Matrix m_;
};

/// The unique map of P^1 sending src[i] to dst[i] projectively.
ProjectiveMap projective_map_through(const std::array<Vector, 3>& src, const std::array<Vector, 3>& dst);

/// A family of index sets, none contained in another.
class IndexFamily {
 public:
  IndexFamily() = default;
  explicit IndexFamily(std::vector<IndexSet> sets);
  const std::vector<IndexSet>& sets() const { return sets_; }

 private:
  std::vector<IndexSet> sets_;
};

/// A translation t for which every set of `family` is concurrent in A^t and
/// no further hyperplane passes through those points. Empty when none exists.
std::optional<Vector> translate_solver(const Arrangement& a, const IndexFamily& family);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<IndexSet> subsets(int n, int k);
/// All k-subsets of `from`.
std::vector<IndexSet> subsets_of(const IndexSet& from, int k);

}  // namespace discarr
