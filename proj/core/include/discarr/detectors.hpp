#pragma once

// Criteria for non-very generic points of B(n,k,A): Crapo 4-sets and the
// Ceva product, involutions of P^1, quintuple families, good 6-partitions,
// and the closure laws relating them.

#include <array>
#include <set>
#include <string>
#include <vector>

#include "discarr/arrangement.hpp"
#include "discarr/discriminantal.hpp"

namespace discarr {

/// Three disjoint pairs. Canonical: each pair ascending, pairs ordered by
/// their first element.
class IndexMatching {
 public:
  using Pair = std::array<int, 2>;

  IndexMatching() = default;
  explicit IndexMatching(std::array<Pair, 3> pairs);

  const std::array<Pair, 3>& pairs() const { return pairs_; }
  IndexSet support() const;
  /// Partner of i under the involution; throws InvalidArgument when i is
  /// not covered.
  int partner(int i) const;
  bool shares_pair(const IndexMatching& o) const;
  /// sigma1 sigma2 sigma1 as a matching; both must cover the same indices.
  IndexMatching conjugate_by(const IndexMatching& sigma1) const;

  /// "12 35 46", or "1-2 3-5 4-10" once an index has two digits.
  std::string to_string() const;

  auto operator<=>(const IndexMatching&) const = default;

 private:
  std::array<Pair, 3> pairs_{};
};

/// The 15 perfect matchings of a 6-element index set, lexicographic.
std::vector<IndexMatching> matchings_of(const IndexSet& six);

/// Four 3-subsets meeting pairwise in one index and covering six indices,
/// each index lying in exactly two of them.
class FourSet {
 public:
  /// Validates the pattern (BadFourSet) and canonicalises.
  explicit FourSet(std::array<IndexSet, 4> sets);
  /// The two 4-sets whose opposite pairs are the given matching; the second
  /// is the complement of the first.
  static std::array<FourSet, 2> from_matching(const IndexMatching& m);

  /// L1 < L2 < L3 < L4 lexicographically.
  const std::array<IndexSet, 4>& sets() const { return sets_; }
  /// p1..p6 with L1 = {p1,p2,p3}, L2 = {p1,p5,p6}, L3 = {p2,p4,p6},
  /// L4 = {p3,p4,p5}.
  std::array<int, 6> labels() const;
  IndexSet support() const;
  FourSet complement() const;
  /// Opposite pairs (p1 p4)(p2 p5)(p3 p6).
  IndexMatching matching() const;

  std::string to_string() const;
  auto operator<=>(const FourSet&) const = default;

 private:
  std::array<IndexSet, 4> sets_;
};

/// Center p0 with spokes (p1,p4), (p2,p5), (p3,p6); rows {p1,p2,p3} and
/// {p4,p5,p6}. Canonical: the row holding the smallest of the six indices
/// comes first and is ascending.
class QuintFamily {
 public:
  QuintFamily(int center, std::array<int, 3> row1, std::array<int, 3> row2);

  int center() const { return center_; }
  const std::array<int, 3>& row1() const { return row1_; }
  const std::array<int, 3>& row2() const { return row2_; }
  /// The five triples, each sorted, in the order p0p1p4, p0p2p5, p0p3p6,
  /// p1p2p3, p4p5p6.
  std::array<IndexSet, 5> sets() const;

  std::string to_string() const;
  auto operator<=>(const QuintFamily&) const = default;

 private:
  int center_;
  std::array<int, 3> row1_, row2_;
};

struct Good6Partition {
  IndexMatching matching;
  /// pair_i union pair_j for the three choices of i < j.
  std::array<IndexSet, 3> sets() const;
};

/// |15||26||34| / |16||24||35| in the canonical labeling.
FieldElement ceva_value(const Arrangement& a, const FourSet& f);
/// [a2,a3;a1,a4][a3,a1;a2,a5][a1,a2;a3,a6]; always equals -ceva_value.
FieldElement crossratio_form(const Arrangement& a, const FourSet& f);

/// Every 4-set with Ceva product 1, sorted. k = 2, generic.
std::vector<FourSet> quadral_points(const Arrangement& a);

struct Involution {
  IndexMatching matching;
  ProjectiveMap map;
};
/// Fixed-point-free involutions of P^1 permuting the six normals. n = 6.
std::vector<Involution> find_involutions(const Arrangement& a);

struct QuintValue {
  FieldElement left, right;
  bool holds() const { return left == right; }
};
/// The two cross ratios [a0,a1;a2,a3] and [a0,a4;a5,a6].
QuintValue quint_value(const Arrangement& a, const QuintFamily& q);
/// Every canonical family satisfying the quintuple condition. Needs n >= 7.
std::vector<QuintFamily> quintuple_points(const Arrangement& a);

struct ClosureViolation {
  std::string rule;
  std::string hypothesis;
  std::string missing;
};
/// Both closure laws for quintuple families: two spoke bijections b1, b2
/// between the same rows force b1 b2^-1 b1; three of the four row splits
/// of a fixed spoke set force the fourth.
std::vector<ClosureViolation> quint_closure_checks(const std::vector<QuintFamily>& detected);
std::vector<ClosureViolation> quint_closure_checks(const Arrangement& a);

/// det(a_p1 x a_p2, a_p3 x a_p4, a_p5 x a_p6). k = 3.
FieldElement good6_condition(const Arrangement& a, const IndexMatching& m);
/// Every matching on every 6-subset with vanishing good6 determinant.
std::vector<IndexMatching> good6_points(const Arrangement& a);
/// For detected sigma1, sigma2 on the same six indices with no common pair,
/// sigma1 sigma2 sigma1 must be detected too.
std::vector<ClosureViolation> pappus_closure_check(const std::vector<IndexMatching>& detected);
std::vector<ClosureViolation> pappus_closure_check(const Arrangement& a);

/// Rank of the discriminantal normals alpha_L, L in `sets`.
std::size_t family_rank(const DiscriminantalArrangement& d, const std::vector<IndexSet>& sets);

/// Number of detected minimal non-very generic points: quadral (+ quintuple
/// when n >= 7) for k = 2, good 6-partitions for k = 3. For k = 2, n >= 7
/// this is a lower bound.
std::size_t detected_m(const Arrangement& a);

std::string format_indices(const IndexSet& s);

}  // namespace discarr
