#include <gtest/gtest.h>

#include "discarr/arrangement.hpp"
#include "discarr/discriminantal.hpp"
#include "discarr/gallery.hpp"
#include "support.hpp"

using namespace discarr;
using discarr::testing::random_generic;

namespace {

Vector qv(std::initializer_list<long> xs) {
  const auto q = FieldDescriptor::rational();
  Vector v;
  for (long x : xs) v.push_back(FieldElement::from_integer(q, x));
  return v;
}

}  // namespace

TEST(Arrangement, ValidatesShape) {
  const auto q = FieldDescriptor::rational();
  EXPECT_THROW(Arrangement(q, 2, {qv({1, 0}), qv({0, 1, 1}), qv({1, 1})}), Error);
  EXPECT_THROW(Arrangement(q, 2, {qv({1, 0}), qv({0, 1})}), Error);
}

TEST(Arrangement, Genericity) {
  const auto q = FieldDescriptor::rational();
  EXPECT_TRUE(is_generic(crapo()));
  EXPECT_FALSE(is_generic(Arrangement(q, 2, {qv({1, 0}), qv({0, 1}), qv({2, 0})})));
  EXPECT_FALSE(is_generic(Arrangement(q, 3, {qv({1, 0, 0}), qv({0, 1, 0}), qv({1, 1, 0}), qv({0, 0, 1})})));
}

TEST(Arrangement, RestrictRelabels) {
  const Arrangement a = crapo().restrict_to({2, 4, 6});
  EXPECT_EQ(a.n(), 3u);
  EXPECT_EQ(a.normal(2), qv({2, 1}));
}

TEST(Arrangement, CrossRatioDefinition) {
  const Vector a = qv({1, 0}), b = qv({0, 1}), c = qv({1, 1}), d = qv({2, 1});
  // |a c||b d| / |b c||a d| = (1)(-1) / (-1)(1) = 1
  EXPECT_EQ(cross_ratio(a, b, c, d), det2(a, c) * det2(b, d) / (det2(b, c) * det2(a, d)));
  EXPECT_THROW(cross_ratio(a, qv({2, 0}), c, d), Error);
}

TEST(Arrangement, CrossRatioIsProjectivelyInvariant) {
  const auto q = FieldDescriptor::rational();
  const auto e = [&](long v) { return FieldElement::from_integer(q, v); };
  const ProjectiveMap f(Matrix::from_rows(q, {{e(2), e(1)}, {e(1), e(3)}}));
  const Vector a = qv({1, 0}), b = qv({0, 1}), c = qv({1, 1}), d = qv({3, 1});
  EXPECT_EQ(cross_ratio(a, b, c, d), cross_ratio(f.apply(a), f.apply(b), f.apply(c), f.apply(d)));
}

TEST(Arrangement, ProjectiveMapThroughThreePoints) {
  const std::array<Vector, 3> src{qv({1, 0}), qv({0, 1}), qv({1, 1})};
  const std::array<Vector, 3> dst{qv({2, 1}), qv({1, 3}), qv({-1, 4})};
  const ProjectiveMap f = projective_map_through(src, dst);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(projectively_equal(f.apply(src[i]), dst[i]));
  EXPECT_TRUE(f.compose(f.inverse()).is_identity());
}

TEST(Arrangement, SubsetsEnumeration) {
  EXPECT_EQ(subsets(6, 3).size(), 20u);
  EXPECT_EQ(subsets(10, 4).size(), 210u);
  EXPECT_EQ(subsets(4, 2).front(), (IndexSet{1, 2}));
  EXPECT_EQ(subsets_of({2, 5, 7}, 2).back(), (IndexSet{5, 7}));
}

TEST(Arrangement, IndexFamilyRejectsNestedSets) {
  EXPECT_THROW(IndexFamily({{1, 2, 3}, {1, 2}}), Error);
  EXPECT_NO_THROW(IndexFamily({{1, 2, 3}, {1, 4, 5}}));
}

namespace {

// Direct check of a translate: the hyperplanes alpha_p . x = t_p for p in
// each set meet, and the other hyperplanes miss that point. For k = 2 the
// common point of a triple is the solution of two of its equations.
void verify_translate(const Arrangement& a, const IndexFamily& fam, const Vector& t) {
  for (const auto& L : fam.sets()) {
    std::vector<Vector> rows;
    Vector rhs;
    for (int p : L) {
      rows.push_back(a.normal(p));
      rhs.push_back(t[static_cast<std::size_t>(p - 1)]);
    }
    const Matrix m = Matrix::from_rows(a.field(), rows);
    const SolveResult s = solve(m, rhs);
    ASSERT_TRUE(s.particular) << "set not concurrent";
    ASSERT_TRUE(s.kernel.empty());
    for (int q = 1; q <= static_cast<int>(a.n()); ++q) {
      if (std::find(L.begin(), L.end(), q) != L.end()) continue;
      EXPECT_NE(dot(a.normal(q), *s.particular), t[static_cast<std::size_t>(q - 1)]) << "extra incidence " << q;
    }
  }
}

}  // namespace

TEST(TranslateSolver, SingleSetOnRandomArrangements) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Arrangement a = random_generic(6, 2, seed);
    for (const auto& L : subsets(6, 3)) {
      const IndexFamily fam({L});
      const auto t = translate_solver(a, fam);
      ASSERT_TRUE(t);
      verify_translate(a, fam, *t);
    }
  }
}

TEST(TranslateSolver, FourSetOnlyWhenCevaHolds) {
  const Arrangement a = crapo();
  const FourSet good({IndexSet{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}});
  const auto sets = good.sets();
  const IndexFamily fam({sets.begin(), sets.end()});
  const auto t = translate_solver(a, fam);
  ASSERT_TRUE(t);
  verify_translate(a, fam, *t);
  for (const auto& f : discarr::testing::all_foursets(6)) {
    const auto s = f.sets();
    const bool exists = translate_solver(a, IndexFamily({s.begin(), s.end()})).has_value();
    EXPECT_EQ(exists, ceva_value(a, f).is_one()) << f.to_string();
  }
}

TEST(TranslateSolver, FiniteFieldWitness) {
  const Arrangement a = f5_arrangement();
  const auto t = translate_solver(a, IndexFamily({{1, 2, 3}}));
  ASSERT_TRUE(t);
  verify_translate(a, IndexFamily({{1, 2, 3}}), *t);
}
