#include "discarr/discriminantal.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "discarr/detectors.hpp"

namespace discarr {

Vector discriminantal_normal(const Arrangement& a, const IndexSet& L) {
  const std::size_t k = a.k();
  if (L.size() != k + 1) throw Error(ErrorCode::kBadSubsetSize, "alpha_L needs |L| = k+1");
  const FieldDescriptor& fd = a.field();
  Vector out = zero_vector(fd, a.n());
  for (std::size_t j = 0; j <= k; ++j) {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i <= k; ++i)
      if (i != j) cols.push_back(a.normal(L[i]));
    FieldElement m = det(Matrix::from_columns(fd, cols));
    out.at(static_cast<std::size_t>(L[j] - 1)) = (j % 2 == 0) ? m : -m;
  }
  return out;
}

std::size_t DiscriminantalArrangement::index_of(const IndexSet& L) const {
  auto it = index_.find(L);
  if (it == index_.end()) throw Error(ErrorCode::kBadSubsetSize, "not a hyperplane of B(n,k,A)");
  return it->second;
}

DiscriminantalArrangement build_discriminantal(const Arrangement& a) {
  if (!is_generic(a)) throw Error(ErrorCode::kNotGeneric, "B(n,k,A) needs a generic arrangement");
  DiscriminantalArrangement d(a);
  d.subsets_ = subsets(static_cast<int>(a.n()), static_cast<int>(a.k()) + 1);
  for (std::size_t h = 0; h < d.subsets_.size(); ++h) {
    d.normals_.push_back(discriminantal_normal(a, d.subsets_[h]));
    d.index_.emplace(d.subsets_[h], h);
  }
  if (rank(a.field(), d.normals_) != a.n() - a.k())
    throw Error(ErrorCode::kNotGeneric, "discriminantal normals do not have rank n-k");
  return d;
}

std::vector<std::size_t> Flat::hyperplanes() const {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < 64; ++h)
    if (support >> h & 1U) out.push_back(h);
  return out;
}

bool Lattice::contains(const Flat& f) const {
  if (f.rank >= by_rank_.size()) return false;
  return std::binary_search(by_rank_[f.rank].begin(), by_rank_[f.rank].end(), f);
}

namespace {

RowSpace span_of(const DiscriminantalArrangement& d, HyperplaneMask mask) {
  RowSpace rs(d.base().field(), d.base().n());
  for (std::size_t h = 0; h < d.size(); ++h)
    if (mask >> h & 1U) rs.insert(d.normals()[h]);
  return rs;
}

HyperplaneMask close_over(const DiscriminantalArrangement& d, const RowSpace& rs, HyperplaneMask mask) {
  for (std::size_t h = 0; h < d.size(); ++h)
    if (!(mask >> h & 1U) && rs.contains(d.normals()[h])) mask |= HyperplaneMask{1} << h;
  return mask;
}

}  // namespace

std::size_t flat_rank(const DiscriminantalArrangement& d, HyperplaneMask mask) {
  return span_of(d, mask).rank();
}

HyperplaneMask closure(const DiscriminantalArrangement& d, HyperplaneMask mask) {
  return close_over(d, span_of(d, mask), mask);
}

Lattice intersection_lattice(const DiscriminantalArrangement& d, std::size_t max_rank) {
  if (d.size() > 64) throw Error(ErrorCode::kTooLarge, "lattice computation is limited to 64 hyperplanes");
  const std::size_t top = d.base().n() - d.base().k();
  if (max_rank == 0 || max_rank > top) max_rank = top;

  std::vector<std::vector<Flat>> levels{{Flat{0, 0}}};
  for (std::size_t r = 0; r < max_rank; ++r) {
    std::unordered_set<HyperplaneMask> seen;
    std::vector<Flat> next;
    for (const Flat& f : levels[r]) {
      const RowSpace base = span_of(d, f.support);
      HyperplaneMask covered = f.support;
      for (std::size_t h = 0; h < d.size(); ++h) {
        if (covered >> h & 1U) continue;
        RowSpace rs = base;
        rs.insert(d.normals()[h]);
        const HyperplaneMask m = close_over(d, rs, f.support | HyperplaneMask{1} << h);
        covered |= m;
        if (seen.insert(m).second) next.push_back(Flat{m, r + 1});
      }
    }
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(next));
  }
  return Lattice(d.size(), std::move(levels));
}

std::vector<Flat> nvg_flats(const DiscriminantalArrangement& d, const Lattice& reference) {
  if (d.size() != reference.hyperplane_count())
    throw Error(ErrorCode::kShapeMismatch, "reference lattice has a different number of hyperplanes");
  const Lattice mine = intersection_lattice(d, reference.max_rank());
  std::vector<Flat> out;
  for (const auto& level : mine.by_rank())
    for (const Flat& f : level)
      if (!reference.contains(f)) out.push_back(f);
  return out;
}

std::vector<IndexSet> support_sets(const DiscriminantalArrangement& d, const Flat& f) {
  std::vector<IndexSet> out;
  for (auto h : f.hyperplanes()) out.push_back(d.subsets()[h]);
  return out;
}

Arrangement reference_very_generic(std::size_t n, std::size_t k, std::uint64_t seed) {
  if ((k != 2 && k != 3) || n <= k || n > 9)
    throw Error(ErrorCode::kInvalidArgument, "reference arrangements need k in {2,3} and k < n <= 9");
  const FieldDescriptor q = FieldDescriptor::rational();
  std::mt19937_64 rng(seed);
  constexpr long kRange = 50;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Vector> normals;
    for (std::size_t p = 0; p < n; ++p) {
      Vector v;
      for (std::size_t i = 0; i < k; ++i)
        v.push_back(FieldElement::from_integer(q, static_cast<long>(rng() % (2 * kRange + 1)) - kRange));
      normals.push_back(std::move(v));
    }
    Arrangement a(q, k, std::move(normals));
    if (!is_generic(a)) continue;
    if (k == 2) {
      if (!quadral_points(a).empty()) continue;
      if (n >= 7 && !quintuple_points(a).empty()) continue;
    } else if (n >= 6 && !good6_points(a).empty()) {
      continue;
    }
    return a;
  }
  throw Error(ErrorCode::kExhaustedRetries, "no very generic sample found");
}

}  // namespace discarr
