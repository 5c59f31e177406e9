#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "discarr/discriminantal.hpp"
#include "discarr/gallery.hpp"
#include "support.hpp"

using namespace discarr;
using discarr::testing::random_generic;

TEST(DiscriminantalNormal, IsTheCramerRelation) {
  // sum_j alpha_L[L_j] * a_{L_j} = 0 for every (k+1)-subset L.
  for (std::size_t k : {2u, 3u}) {
    const Arrangement a = random_generic(6, k, 7 + k);
    for (const auto& L : subsets(6, static_cast<int>(k) + 1)) {
      const Vector al = discriminantal_normal(a, L);
      Vector sum = zero_vector(a.field(), k);
      for (int p : L) sum = add(sum, scaled(a.normal(p), al[static_cast<std::size_t>(p - 1)]));
      EXPECT_TRUE(is_zero_vector(sum));
      for (int p = 1; p <= 6; ++p)
        if (std::find(L.begin(), L.end(), p) == L.end()) EXPECT_TRUE(al[static_cast<std::size_t>(p - 1)].is_zero());
    }
  }
}

TEST(DiscriminantalNormal, SignConvention) {
  // alpha_{123} for crapo: (|a2 a3|, -|a1 a3|, |a1 a2|, 0, 0, 0) = (-1, -1, 1, 0, 0, 0)
  const Vector al = discriminantal_normal(crapo(), {1, 2, 3});
  const auto q = FieldDescriptor::rational();
  EXPECT_EQ(al[0], FieldElement::from_integer(q, -1));
  EXPECT_EQ(al[1], FieldElement::from_integer(q, -1));
  EXPECT_EQ(al[2], FieldElement::from_integer(q, 1));
}

TEST(Discriminantal, HasFullRankNMinusK) {
  for (std::size_t k : {1u, 2u, 3u}) {
    const auto d = build_discriminantal(random_generic(6, k, 3));
    EXPECT_EQ(d.size(), static_cast<std::size_t>(binomial(6, static_cast<long>(k) + 1)));
    EXPECT_EQ(rank(d.base().field(), d.normals()), 6 - k);
    for (std::size_t h = 0; h < d.size(); ++h) EXPECT_EQ(d.index_of(d.subsets()[h]), h);
    EXPECT_THROW(d.index_of({1}), Error);
  }
  const auto q = FieldDescriptor::rational();
  const auto e = [&](long v) { return FieldElement::from_integer(q, v); };
  EXPECT_THROW(build_discriminantal(Arrangement(q, 2, {{e(1), e(0)}, {e(2), e(0)}, {e(1), e(1)}})), Error);
}

TEST(Lattice, ClosureIsIdempotentAndFlatsAreClosed) {
  const auto d = build_discriminantal(octahedral());
  const Lattice lat = intersection_lattice(d);
  EXPECT_EQ(lat.max_rank(), 4u);
  EXPECT_EQ(lat.by_rank()[0].size(), 1u);
  EXPECT_EQ(lat.by_rank()[1].size(), d.size());
  EXPECT_EQ(lat.by_rank()[4].size(), 1u);
  for (const auto& level : lat.by_rank())
    for (const auto& f : level) {
      EXPECT_EQ(closure(d, f.support), f.support);
      EXPECT_EQ(flat_rank(d, f.support), f.rank);
      EXPECT_TRUE(lat.contains(f));
    }
}

TEST(Lattice, RankTwoFlatsAgainstPairEnumeration) {
  // Every rank-2 flat is the closure of some pair, and every pair closes to
  // a rank-2 flat.
  const auto d = build_discriminantal(dodecahedral());
  const Lattice lat = intersection_lattice(d);
  std::set<HyperplaneMask> pairs;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) pairs.insert(closure(d, (1ULL << i) | (1ULL << j)));
  std::set<HyperplaneMask> flats;
  for (const auto& f : lat.by_rank()[2]) flats.insert(f.support);
  EXPECT_EQ(pairs, flats);
}

TEST(Lattice, VeryGenericReferencesAgree) {
  for (std::size_t k : {2u, 3u}) {
    const auto ref = intersection_lattice(build_discriminantal(reference_very_generic(6, k, 0)));
    for (std::uint64_t seed = 1; seed <= 3; ++seed)
      EXPECT_TRUE(nvg_flats(build_discriminantal(reference_very_generic(6, k, seed)), ref).empty());
  }
}

TEST(Lattice, OctahedralNvgFlatsAreTheQuadralFourSets) {
  const Arrangement a = octahedral();
  const auto d = build_discriminantal(a);
  const auto ref = intersection_lattice(build_discriminantal(reference_very_generic(6, 2, 0)));
  const auto nvg = nvg_flats(d, ref);
  ASSERT_EQ(nvg.size(), 12u);
  std::set<std::vector<IndexSet>> supports, quadral;
  for (const auto& f : nvg) {
    EXPECT_EQ(f.rank, 3u);
    EXPECT_EQ(std::popcount(f.support), 4);
    supports.insert(support_sets(d, f));
  }
  for (const auto& f : quadral_points(a)) quadral.insert(discarr::testing::as_vector(f.sets()));
  EXPECT_EQ(supports, quadral);
}

TEST(Lattice, ShapeMismatchAndSizeLimit) {
  const auto ref = intersection_lattice(build_discriminantal(reference_very_generic(6, 3, 0)));
  EXPECT_THROW(nvg_flats(build_discriminantal(crapo()), ref), Error);
  EXPECT_THROW(intersection_lattice(build_discriminantal(regular_polygon(9))), Error);  // 84 hyperplanes
}
