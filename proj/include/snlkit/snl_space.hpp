#pragma once

#include <cstdint>
#include <optional>

#include "snlkit/report.hpp"
#include "snlkit/types.hpp"

namespace snlkit {

inline constexpr double kDefaultTol = 1e-9;

/// A finite-dimensional SNL space: R^n with the Euclidean norm, its dual
/// identified with R^n through the dot product, and a symmetric map L with
/// spectral norm at most one.
///
/// A dual SNL structure exists exactly when L is an orthogonal involution
/// (L*L = I); the dual map is then L itself. Instances are immutable.
class SnlSpace {
 public:
  Eigen::Index dim() const noexcept { return L_.rows(); }
  const Matrix& L() const noexcept { return L_; }
  bool has_dual() const noexcept { return dual_.has_value(); }
  /// Throws NoDual when the space has no dual structure.
  const Matrix& dual_map() const;
  double tol() const noexcept { return tol_; }

  /// Set for spaces built by make_product_space: the dimension d of E in E x E*.
  std::optional<Eigen::Index> product_edim() const noexcept { return product_edim_; }

  /// (B, -L), with dual -L~ when a dual exists.
  SnlSpace negated() const;

  /// (B*, L~) viewed as an SNL space in its own right; its dual is L again.
  SnlSpace dual_space() const;

  /// Validates L as an SNL map but takes `claimed_dual` on trust. Used to
  /// audit a candidate dual with validate_dual.
  static SnlSpace with_claimed_dual(const Matrix& L, const Matrix& claimed_dual,
                                    double tol = kDefaultTol);

 private:
  SnlSpace(Matrix L, std::optional<Matrix> dual, double tol)
      : L_(std::move(L)), dual_(std::move(dual)), tol_(tol) {}

  Matrix L_;
  std::optional<Matrix> dual_;
  double tol_;
  std::optional<Eigen::Index> product_edim_;

  friend SnlSpace make_snl_space(const Matrix& L, double tol);
  friend SnlSpace make_product_space(Eigen::Index d);
};

/// Throws NotSymmetric or NormExceedsOne with the offending quantity in the message.
SnlSpace make_snl_space(const Matrix& L, double tol = kDefaultTol);

/// E x E* with E = R^d: L swaps the two blocks, coordinates are (x_1..x_d, x*_1..x*_d).
SnlSpace make_product_space(Eigen::Index d);

/// q_L(b) = 1/2 <b, L b>.
double q(const SnlSpace& space, const Vector& b);

/// q_L~(b*) = 1/2 <b*, L~ b*>. Throws NoDual.
double q_dual(const SnlSpace& space, const Vector& bstar);

/// Samples random pairs (b, b*) and checks the dual identities:
/// q~(b* + Lb) = q~(b*) + <b, b*> + q(b), |Lb| = |b|, and q~ + 1/2|.|^2 >= 0.
CheckReport validate_dual(const SnlSpace& space, int samples, std::uint64_t seed);

/// The Euclidean duality map is the identity.
Vector duality_map(const SnlSpace& space, const Vector& c);

/// Largest |L_ij - L_ji|.
double max_asymmetry(const Matrix& L);

}  // namespace snlkit
