#pragma once

#include <cstdint>

#include "snlkit/convex.hpp"
#include "snlkit/positivity.hpp"

namespace snlkit {

/// A linear relation A in E x E* with E = R^d, stored as a subspace of R^{2d}
/// with coordinates (x, x*). The dual product E* x E** is identified with the
/// same coordinates, read as (y*, y**).
struct LinearRelation {
  Eigen::Index edim;
  Subspace graph;

  LinearRelation(Eigen::Index d, Subspace g);
};

/// {(x, Mx)}.
LinearRelation relation_from_matrix(const Matrix& m);

/// Monotone iff L-positive in the product space.
CheckReport is_monotone(const LinearRelation& r, double tol = kDefaultCheckTol);

/// Image under (u, v) -> (u, -v). Throws OddDimension.
Subspace rho(const Subspace& s);

/// rho(polar(graph)): all (y*, y**) with <a, y*> = <a*, y**> for every (a, a*) in A.
LinearRelation adjoint(const LinearRelation& r);

/// inf_{a in A} q~(d* - La), computed as q~(d*) - (q^A)*(d*). Throws NotMonotone.
ExtReal ni_infimum(const LinearRelation& r, const Vector& dstar, double tol = kDefaultCheckTol);

struct DenseWitness {
  Vector d;
  double value;  // q~(d* - Ld) + 1/2 |d* - Ld|^2
};

/// For d* = (y*, y**) returns d = (0, y* + y**), which makes the value zero up
/// to rounding. Throws NotProductSpace.
DenseWitness pdense_witness(const SnlSpace& space, const Vector& dstar);

struct NiSweepOptions {
  int samples = 200;
  std::uint64_t seed = 0;
};

/// Evaluates the four conditions
///   (a) polar(A) is L~-negative          exact eigenvalue test
///   (b) ni_infimum(d*) <= tol, all d*     sampled
///   (c) the same for d* in polar(A)       sampled
///   (d) A is maximally monotone           exact polar test
/// and checks that (a), (b), (c) agree and (a) implies (d).
///
/// Status is Pass iff A is maximal monotone of type (NI) with the pattern
/// intact. Evidence "pattern_ok" is 0 when the expected pattern is violated.
/// Throws NotMonotone.
CheckReport is_type_ni(const LinearRelation& r, double tol = kDefaultCheckTol,
                       NiSweepOptions opts = {});

/// Truth table maximal(A), monotone(A*), maximal(A*), type-NI(A); Pass iff the
/// four agree. Throws NotMonotone.
CheckReport brezis_browder_check(const LinearRelation& r, double tol = kDefaultCheckTol,
                                 NiSweepOptions opts = {});

}  // namespace snlkit
