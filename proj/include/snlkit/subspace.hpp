#pragma once

#include <vector>

#include "snlkit/types.hpp"

namespace snlkit {

inline constexpr double kDefaultRankTol = 1e-10;

/// A linear subspace of R^n held as an n x k matrix with orthonormal columns.
/// k may be zero.
class Subspace {
 public:
  /// Zero subspace of R^n.
  explicit Subspace(Eigen::Index ambient_dim, double rank_tol = kDefaultRankTol);

  /// Columns of `basis` are orthonormalised (and rank-reduced) on the way in.
  static Subspace from_columns(const Matrix& columns, double rank_tol = kDefaultRankTol);

  /// Whole space R^n.
  static Subspace full(Eigen::Index ambient_dim);

  Eigen::Index ambient_dim() const noexcept { return n_; }
  Eigen::Index rank() const noexcept { return basis_.cols(); }
  bool is_zero() const noexcept { return basis_.cols() == 0; }
  const Matrix& basis() const noexcept { return basis_; }
  double rank_tol() const noexcept { return rank_tol_; }

  /// Orthogonal projection of v onto the subspace.
  Vector project(const Vector& v) const;

  /// Component of v orthogonal to the subspace.
  Vector residual(const Vector& v) const { return v - project(v); }

 private:
  Subspace(Eigen::Index n, Matrix basis, double rank_tol)
      : n_(n), basis_(std::move(basis)), rank_tol_(rank_tol) {}

  Eigen::Index n_;
  Matrix basis_;
  double rank_tol_;

  friend Subspace span(const std::vector<Vector>&, double);
  friend Subspace polar(const Subspace&);
};

/// C = A - d.
struct AffineSet {
  Subspace direction;
  Vector shift;

  bool contains(const Vector& c, double tol = 1e-9) const;
  Eigen::Index ambient_dim() const noexcept { return direction.ambient_dim(); }
  /// The member of C nearest the origin.
  Vector nearest_to_origin() const;
};

/// Orthonormal basis of span(vectors). Singular values below
/// rank_tol * (largest singular value) are dropped.
Subspace span(const std::vector<Vector>& vectors, double rank_tol = kDefaultRankTol);

/// Same as span() but with a fixed ambient dimension, so an empty list is allowed.
Subspace span_in(Eigen::Index ambient_dim, const std::vector<Vector>& vectors,
                 double rank_tol = kDefaultRankTol);

/// |v - P v| <= tol * max(1, |v|).
bool contains(const Subspace& s, const Vector& v, double tol = 1e-9);

/// Annihilator under the dot-product pairing, i.e. the orthogonal complement.
/// Its rank is ambient_dim - rank exactly.
Subspace polar(const Subspace& s);

AffineSet shift(const Subspace& a, const Vector& d);

/// Mutual containment of bases.
bool same_subspace(const Subspace& a, const Subspace& b, double tol = 1e-9);

/// Columns of `s` as a list of vectors.
std::vector<Vector> basis_vectors(const Subspace& s);

/// Direct sum a + b.
Subspace sum(const Subspace& a, const Subspace& b);

}  // namespace snlkit
