#pragma once

// Helpers shared by the unit tests and the acceptance binary: seeded random
// arrangements and brute-force enumerations of candidate families.

#include <random>
#include <set>

#include "discarr/arrangement.hpp"
#include "discarr/detectors.hpp"

namespace discarr::testing {

/// Generic arrangement over Q with integer entries in [-range, range].
inline Arrangement random_generic(std::size_t n, std::size_t k, std::uint64_t seed, int range = 4) {
  const auto q = FieldDescriptor::rational();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-range, range);
  for (;;) {
    std::vector<Vector> normals;
    for (std::size_t i = 0; i < n; ++i) {
      Vector v;
      for (std::size_t j = 0; j < k; ++j) v.push_back(FieldElement::from_integer(q, dist(rng)));
      normals.push_back(std::move(v));
    }
    Arrangement a(q, k, std::move(normals));
    if (is_generic(a)) return a;
  }
}

inline std::vector<FourSet> all_foursets(int n) {
  std::set<FourSet> out;
  for (const auto& six : subsets(n, 6))
    for (const auto& m : matchings_of(six))
      for (const auto& f : FourSet::from_matching(m)) out.insert(f);
  return {out.begin(), out.end()};
}

inline std::vector<QuintFamily> all_quints(int n) {
  std::set<QuintFamily> out;
  for (int c = 1; c <= n; ++c) {
    IndexSet rest;
    for (int i = 1; i <= n; ++i)
      if (i != c) rest.push_back(i);
    for (const auto& six : subsets_of(rest, 6))
      for (const auto& m : matchings_of(six)) {
        const auto& p = m.pairs();
        for (int x = 0; x < 2; ++x)
          for (int y = 0; y < 2; ++y)
            out.insert(QuintFamily(c, {p[0][0], p[1][x], p[2][y]}, {p[0][1], p[1][1 - x], p[2][1 - y]}));
      }
  }
  return {out.begin(), out.end()};
}

inline std::vector<IndexMatching> all_six_matchings(int n) {
  std::vector<IndexMatching> out;
  for (const auto& six : subsets(n, 6))
    for (const auto& m : matchings_of(six)) out.push_back(m);
  return out;
}

template <std::size_t N>
std::vector<IndexSet> as_vector(const std::array<IndexSet, N>& a) {
  return {a.begin(), a.end()};
}

}  // namespace discarr::testing
