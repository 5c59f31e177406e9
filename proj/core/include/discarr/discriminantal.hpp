#pragma once

// The discriminantal arrangement B(n,k,A): one hyperplane D_L in the space of
// translations K^n for every (k+1)-subset L, and its intersection lattice.

#include <cstdint>
#include <map>
#include <vector>

#include "discarr/arrangement.hpp"

namespace discarr {

/// alpha_L: coordinate L[j] (0-based j) is (-1)^j times the k x k minor of
/// the normals of L with alpha_{L[j]} removed; zero off L.
Vector discriminantal_normal(const Arrangement& a, const IndexSet& L);

class DiscriminantalArrangement {
 public:
  const Arrangement& base() const { return base_; }
  /// The (k+1)-subsets in lexicographic order; hyperplane h is subsets()[h].
  const std::vector<IndexSet>& subsets() const { return subsets_; }
  const std::vector<Vector>& normals() const { return normals_; }
  std::size_t size() const { return subsets_.size(); }
  /// Position of L in subsets(); throws BadSubsetSize when absent.
  std::size_t index_of(const IndexSet& L) const;

 private:
  friend DiscriminantalArrangement build_discriminantal(const Arrangement& a);
  explicit DiscriminantalArrangement(Arrangement base) : base_(std::move(base)) {}

  Arrangement base_;
  std::vector<IndexSet> subsets_;
  std::vector<Vector> normals_;
  std::map<IndexSet, std::size_t> index_;
};

/// Throws NotGeneric for a non-generic base arrangement.
DiscriminantalArrangement build_discriminantal(const Arrangement& a);

using HyperplaneMask = std::uint64_t;

struct Flat {
  HyperplaneMask support = 0;  // bit h set iff D_h contains the flat
  std::size_t rank = 0;

  std::vector<std::size_t> hyperplanes() const;
  bool operator==(const Flat& o) const { return support == o.support && rank == o.rank; }
  bool operator<(const Flat& o) const {
    return rank != o.rank ? rank < o.rank : support < o.support;
  }
};

class Lattice {
 public:
  Lattice(std::size_t hyperplanes, std::vector<std::vector<Flat>> by_rank)
      : hyperplanes_(hyperplanes), by_rank_(std::move(by_rank)) {}

  std::size_t hyperplane_count() const { return hyperplanes_; }
  /// by_rank()[r] lists the rank-r flats sorted by support; r = 0 is the
  /// whole space.
  const std::vector<std::vector<Flat>>& by_rank() const { return by_rank_; }
  std::size_t max_rank() const { return by_rank_.size() - 1; }
  bool contains(const Flat& f) const;

 private:
  std::size_t hyperplanes_;
  std::vector<std::vector<Flat>> by_rank_;
};

/// Rank of the normals selected by `mask`.
std::size_t flat_rank(const DiscriminantalArrangement& d, HyperplaneMask mask);
/// Every hyperplane whose normal lies in the span of those in `mask`.
HyperplaneMask closure(const DiscriminantalArrangement& d, HyperplaneMask mask);

/// All flats of rank <= max_rank (default n - k). Throws TooLarge above 64
/// hyperplanes.
Lattice intersection_lattice(const DiscriminantalArrangement& d, std::size_t max_rank = 0);

/// Random integer normals over Q, resampled until the arrangement is generic
/// and every non-very-generic detector comes back empty.
Arrangement reference_very_generic(std::size_t n, std::size_t k, std::uint64_t seed);

/// Flats of `d` up to the reference's top rank whose (support, rank) pair is
/// absent from `reference`.
std::vector<Flat> nvg_flats(const DiscriminantalArrangement& d, const Lattice& reference);

/// The support of a flat as sorted (k+1)-subsets.
std::vector<IndexSet> support_sets(const DiscriminantalArrangement& d, const Flat& f);

}  // namespace discarr
