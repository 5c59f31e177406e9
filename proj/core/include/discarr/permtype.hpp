#pragma once

// S_6, its outer automorphism phi, and the labelled complete graph phi(K_6):
// vertices 1..6, the edge {i,j} labelled by phi((i j)), a fixed-point-free
// involution and hence a perfect matching of [6].
//
// Composition applies the right factor first: (a * b)(x) = a(b(x)).

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "discarr/arrangement.hpp"
#include "discarr/detectors.hpp"

namespace discarr {

class Perm {
 public:
  /// Identity.
  Perm();
  /// images[i-1] = image of i; must be a bijection of [6].
  explicit Perm(std::array<int, 6> images);
  static Perm transposition(int i, int j);
  /// Product of disjoint cycles, e.g. {{1,5},{2,6},{3,4}}.
  static Perm from_cycles(const std::vector<std::vector<int>>& cycles);
  static Perm from_matching(const IndexMatching& m);

  int operator()(int x) const { return img_[static_cast<std::size_t>(x - 1)]; }
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;
  /// Cycle lengths, descending, fixed points included.
  std::vector<int> cycle_type() const;
  /// Lexicographic rank among the 720 permutations.
  int index() const;
  static Perm from_index(int index);

  /// Cycle notation without fixed points, "(15)(26)(34)", "()" for identity.
  std::string to_string() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::array<int, 6> img_;
};

/// The outer automorphism fixed by phi((12)) = (15)(26)(34),
/// phi((23)) = (12)(35)(46), phi((34)) = (15)(24)(36),
/// phi((45)) = (14)(26)(35), phi((56)) = (15)(23)(46).
Perm phi(const Perm& p);

/// Canonical numbering of the 15 edges {i<j} of K_6, lexicographic.
int edge_index(int i, int j);
std::array<int, 2> edge_vertices(int edge);

using EdgeMask = std::uint16_t;  // bit e set iff edge e is present

/// phi((i j)).
Perm edge_label(int i, int j);
/// The edge whose label is the involution of m. Throws NotAMatchingLabel.
std::array<int, 2> matching_to_edge(const IndexMatching& m);

/// Orbits of <s> on [6], each sorted, ordered by smallest element.
std::vector<std::vector<int>> o_map(const Perm& s);

class VertexPartition {
 public:
  explicit VertexPartition(std::vector<std::vector<int>> blocks);
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  bool operator==(const VertexPartition& o) const { return blocks_ == o.blocks_; }
  std::string to_string() const;

 private:
  std::vector<std::vector<int>> blocks_;
};

/// Integer partition of 6: size -> multiplicity.
class PartitionType {
 public:
  explicit PartitionType(std::map<int, int> parts);
  static PartitionType of(const VertexPartition& v);
  /// Accepts "1^2 4^1" (spaces optional between factors).
  static PartitionType parse(const std::string& s);
  /// The eleven partitions of 6 in the classification-table order.
  static const std::vector<PartitionType>& all();

  const std::map<int, int>& parts() const { return parts_; }
  /// "1^2 4^1".
  std::string to_string() const;
  /// A fixed vertex partition of this type: consecutive blocks, small
  /// blocks last, e.g. 1^2 4^1 -> {1,2,3,4},{5},{6}.
  VertexPartition representative() const;

  bool operator==(const PartitionType& o) const { return parts_ == o.parts_; }

 private:
  std::map<int, int> parts_;
};

/// sum_j a_j C(d_j, 2).
int m_of_type(const PartitionType& nu);
EdgeMask induced_edges(const VertexPartition& v);
VertexPartition partition_from_edges(EdgeMask edges);
/// All 203 set partitions of [6].
std::vector<VertexPartition> all_set_partitions();

struct TypeReport {
  std::size_t k = 0;
  std::vector<IndexMatching> matchings;  // detected, as the edge labels
  EdgeMask edges = 0;
  VertexPartition partition{{{1}, {2}, {3}, {4}, {5}, {6}}};
  PartitionType type{std::map<int, int>{{1, 6}}};
  std::size_t m_a = 0;   // detected non-very generic points
  int m_nu = 0;
  bool count_consistent = false;  // m_a == 2 m_nu (k = 2) or m_nu (k = 3)
};

/// Classify an arrangement of six hyperplanes in K^2 or K^3. Throws
/// ClosureViolation when the detected edge set is not the edge set induced by
/// its own components.
TypeReport arrangement_type(const Arrangement& a);

/// m(A) <= 20 and no 6^1 edge set for k = 2.
bool upper_bound_check(const TypeReport& r);

}  // namespace discarr
