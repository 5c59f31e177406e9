#pragma once

// Named arrangements, regular-polygon arrangements with their predicted
// non-very generic families, and the witness solver for the classification
// of six planes in K^3 by partition type.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "discarr/arrangement.hpp"
#include "discarr/detectors.hpp"
#include "discarr/mpoly.hpp"
#include "discarr/permtype.hpp"

namespace discarr {

/// (1,0),(0,1),(1,1),(2,1),(3,1),(4,1) over Q: one Crapo 4-set pair.
Arrangement crapo();
/// (1,0),(0,1),(1,1),(-1,1),(i,1),(-i,1) over Q(sqrt -1).
Arrangement octahedral();
/// Normals (1,0,t),(1,0,-t),(0,t,1),(0,-t,1),(t,1,0),(-t,1,0) with t the
/// golden ratio, over Q(sqrt 5).
Arrangement dodecahedral();
/// Columns e1, e2, e3, (1,1,1), (w,x,1), (y,z,1) with w = z = omega,
/// x = y = omega^2 over F_4 = F_2[x]/(x^2+x+1).
Arrangement f4_arrangement();
/// The six points of P^1(F_5).
Arrangement f5_arrangement();
/// alpha_p = (cos(p pi/n), sin(p pi/n)), p = 1..n, over Q(zeta_4n).
Arrangement regular_polygon(int n);

/// The normal form e1, e2, e3, (1,1,1), (w,x,1), (y,z,1) in K^3.
Arrangement six_plane_normal_form(const std::array<FieldElement, 4>& wxyz);
/// det(a_p1 x a_p2, a_p3 x a_p4, a_p5 x a_p6) for the normal form, as a
/// polynomial in w, x, y, z.
MPoly edge_equation(const IndexMatching& m);
/// Expressions that are nonzero exactly when the normal form is generic:
/// w, x, y, z, w-1, x-1, y-1, z-1, w-x, w-y, x-z, y-z, wz-xy,
/// w-x-y+z-wz+xy.
std::vector<MPoly> genericity_conditions();

struct Witness {
  FieldDescriptor field;
  std::array<FieldElement, 4> wxyz;
  Arrangement arrangement;
  /// True when some parameter was a free choice rather than forced.
  bool perturbed = false;
};

struct ClassificationResult {
  PartitionType type;
  VertexPartition partition;
  std::vector<IndexMatching> edge_matchings;
  std::vector<MPoly> equations;

  /// The system after linear elimination, recorded where it first became a
  /// single univariate equation: var = expression, then residual = 0.
  std::vector<std::pair<int, MPoly>> reduced;
  std::optional<RationalPoly> residual;
  int residual_var = MPoly::kX;
  /// Rational roots of the residual; each one makes some genericity
  /// condition vanish identically.
  std::vector<Rational> rejected_roots;
  /// Residual with its rational roots removed, when of positive degree.
  std::optional<RationalPoly> extension_polynomial;

  /// No solution over any field of characteristic 0, proved by elimination
  /// without free choices.
  bool certified_none = false;
  /// No rational solution: forced elimination, rejected rational roots and an
  /// irreducible quadratic remainder.
  bool certified_irrational = false;
  std::optional<Witness> witness;
  std::vector<std::string> trace;
};

/// Solve the edge equations of the representative partition of `nu`. Free
/// parameters are drawn from a generator seeded by `seed`; x = 2 is tried
/// first. Throws ExhaustedRetries when no witness confirms the type.
ClassificationResult classify_type(const PartitionType& nu, std::uint64_t seed = 0);
std::optional<Arrangement> classification_witness(const PartitionType& nu);

struct PolygonPrediction {
  std::vector<FourSet> foursets;
  std::vector<QuintFamily> quints;
};
/// Families forced by reflection symmetries of R_n. n >= 6.
PolygonPrediction predicted_polygon_sets(int n);
/// Orbits of the reflection fixing alpha_p (or alpha_{p-1} + alpha_p when
/// `between` is set) on the indices 1..n, each sorted.
std::vector<std::vector<int>> reflection_orbits(int n, int p, bool between);
/// Lower bounds for R_n.
long polygon_quadral_bound(int n);
long polygon_quint_bound(int n);

std::vector<std::string> gallery_names();
/// crapo, octahedral, dodecahedral, f4, f5, polygon-<n>, witness-<type>.
/// Throws InvalidArgument for unknown names and for starred witness types.
Arrangement gallery_item(const std::string& name);

long binomial(long n, long k);

}  // namespace discarr
