#pragma once

#include <cstdint>
#include <optional>

#include "snlkit/report.hpp"
#include "snlkit/snl_space.hpp"
#include "snlkit/subspace.hpp"

namespace snlkit {

inline constexpr double kDefaultCheckTol = 1e-8;

/// The quadratic form of a symmetric map restricted to a subspace,
/// H = basis^T * M * basis, diagonalised once.
///
/// `infimum(g)` minimises 1/2 t^T H t - t^T g over all coordinates t in closed
/// form. The result is -inf when g has a component outside the numerical range
/// of H; otherwise it is -1/2 g^T H^+ g. Eigenvalues at or below
/// rank_tol * max(1, |lambda|_max) count as zero, and the range test uses the
/// same rank_tol relative to `scale`.
class RestrictedForm {
 public:
  RestrictedForm(const Matrix& M, const Subspace& s);

  const Matrix& matrix() const noexcept { return H_; }
  const Vector& eigenvalues() const noexcept { return eigenvalues_; }
  const Matrix& eigenvectors() const noexcept { return eigenvectors_; }
  const Subspace& subspace() const noexcept { return s_; }
  double zero_cutoff() const noexcept { return cutoff_; }

  double min_eigenvalue() const;
  double max_eigenvalue() const;

  /// inf_t 1/2 t^T H t - t^T g. `argmin` (coordinates) is filled when finite.
  /// Requires H to be positive semidefinite up to the cutoff.
  ExtReal infimum(const Vector& g, double scale, Vector* argmin = nullptr) const;

 private:
  Subspace s_;
  Matrix H_;
  Vector eigenvalues_;
  Matrix eigenvectors_;
  double cutoff_ = 0.0;
};

/// A is L-positive iff basis^T L basis is positive semidefinite.
/// Pass iff lambda_min >= -tol * max(1, |lambda|_max); a Fail carries the
/// eigen-direction w in A with q(w) < 0.
CheckReport is_positive(const SnlSpace& space, const Subspace& a, double tol = kDefaultCheckTol);

/// Mirror image of is_positive; a Fail carries w in A with q(w) > 0.
CheckReport is_negative(const SnlSpace& space, const Subspace& a, double tol = kDefaultCheckTol);

/// Maximal L-positivity through the polar criterion: A is maximal iff its
/// polar is L~-negative. Requires a dual (NoDual) and an L-positive A
/// (NotPositive). A Fail carries the polar direction w with q~(w) > 0 and the
/// extension point L~ w, which can be added to A without losing positivity.
CheckReport is_maximally_positive(const SnlSpace& space, const Subspace& a,
                                  double tol = kDefaultCheckTol);

/// Maximal L-negativity: A negative and its polar L~-positive.
CheckReport is_maximally_negative(const SnlSpace& space, const Subspace& a,
                                  double tol = kDefaultCheckTol);

/// inf_{a in A} q(d - a), in closed form. Throws NotPositive.
ExtReal inf_q_over(const SnlSpace& space, const Subspace& a, const Vector& d,
                   double tol = kDefaultCheckTol);

/// Random search for a point d outside A with inf_{a in A} q(d - a) >= 0,
/// i.e. a point whose addition keeps A L-positive. A returned vector
/// disproves maximality; an empty result is only evidence.
///
/// A candidate counts when dist(d, A) > tol * max(1, |d|) and
/// inf_q_over(d) >= -tol * dist(d, A)^2 (the infimum is quadratic in the
/// component of d orthogonal to A).
std::optional<Vector> extension_oracle(const SnlSpace& space, const Subspace& a, int trials,
                                       std::uint64_t seed, double tol = kDefaultCheckTol);

/// Decides maximality when possible and falls back on the oracle otherwise:
/// with a dual this is is_maximally_positive plus an oracle cross-check in the
/// evidence; without one the result is Fail (oracle witness) or Inconclusive.
CheckReport assess_maximality(const SnlSpace& space, const Subspace& a, int trials,
                              std::uint64_t seed, double tol = kDefaultCheckTol);

/// polar(polar(A)) == A, and L restricted to it is positive semidefinite.
CheckReport bidual_positivity_check(const SnlSpace& space, const Subspace& a,
                                    double tol = kDefaultCheckTol);

/// True iff span(A, d) is L-positive; re-validates oracle witnesses.
bool extension_keeps_positive(const SnlSpace& space, const Subspace& a, const Vector& d,
                              double tol = kDefaultCheckTol);

}  // namespace snlkit
