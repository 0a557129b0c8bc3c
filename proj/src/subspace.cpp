#include "snlkit/subspace.hpp"

#include <algorithm>

namespace snlkit {

Subspace::Subspace(Eigen::Index ambient_dim, double rank_tol)
    : n_(ambient_dim), basis_(ambient_dim, 0), rank_tol_(rank_tol) {
  if (ambient_dim < 1) throw Error(ErrorCode::DimensionMismatch, "ambient dimension must be >= 1");
}

Subspace Subspace::from_columns(const Matrix& columns, double rank_tol) {
  std::vector<Vector> vs;
  vs.reserve(columns.cols());
  for (Eigen::Index j = 0; j < columns.cols(); ++j) vs.emplace_back(columns.col(j));
  return span_in(columns.rows(), vs, rank_tol);
}

Subspace Subspace::full(Eigen::Index ambient_dim) {
  return Subspace(ambient_dim, Matrix::Identity(ambient_dim, ambient_dim), kDefaultRankTol);
}

Vector Subspace::project(const Vector& v) const {
  require_dim(v.size(), n_, "vector");
  if (is_zero()) return Vector::Zero(n_);
  return basis_ * (basis_.transpose() * v);
}

bool AffineSet::contains(const Vector& c, double tol) const {
  require_dim(c.size(), ambient_dim(), "point");
  return snlkit::contains(direction, c + shift, tol);
}

Vector AffineSet::nearest_to_origin() const { return -direction.residual(shift); }

Subspace span(const std::vector<Vector>& vectors, double rank_tol) {
  if (vectors.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "span of an empty list needs an ambient dimension");
  }
  const auto n = vectors.front().size();
  if (n < 1) throw Error(ErrorCode::DimensionMismatch, "vectors must have length >= 1");
  Matrix m(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    require_dim(vectors[j].size(), n, "spanning vector");
    m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  if (m.cwiseAbs().maxCoeff() == 0.0) return Subspace(n, rank_tol);

  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const Vector& sv = svd.singularValues();
  const double cutoff = rank_tol * sv[0];
  Eigen::Index k = 0;
  while (k < sv.size() && sv[k] > cutoff) ++k;
  return Subspace(n, svd.matrixU().leftCols(k), rank_tol);
}

Subspace span_in(Eigen::Index ambient_dim, const std::vector<Vector>& vectors, double rank_tol) {
  if (vectors.empty()) return Subspace(ambient_dim, rank_tol);
  require_dim(vectors.front().size(), ambient_dim, "spanning vector");
  return span(vectors, rank_tol);
}

bool contains(const Subspace& s, const Vector& v, double tol) {
  return s.residual(v).norm() <= tol * std::max(1.0, v.norm());
}

Subspace polar(const Subspace& s) {
  const auto n = s.ambient_dim();
  const auto k = s.rank();
  if (k == 0) return Subspace(n, Matrix::Identity(n, n), s.rank_tol());
  if (k == n) return Subspace(n, s.rank_tol());
  // The trailing n - k columns of a full orthogonal factor of the basis span
  // its complement.
  Eigen::HouseholderQR<Matrix> qr(s.basis());
  const Matrix Q = qr.householderQ() * Matrix::Identity(n, n);
  return Subspace(n, Q.rightCols(n - k), s.rank_tol());
}

AffineSet shift(const Subspace& a, const Vector& d) {
  require_dim(d.size(), a.ambient_dim(), "shift");
  return AffineSet{a, d};
}

bool same_subspace(const Subspace& a, const Subspace& b, double tol) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  for (Eigen::Index j = 0; j < a.rank(); ++j) {
    if (!contains(b, a.basis().col(j), tol)) return false;
  }
  for (Eigen::Index j = 0; j < b.rank(); ++j) {
    if (!contains(a, b.basis().col(j), tol)) return false;
  }
  return true;
}

std::vector<Vector> basis_vectors(const Subspace& s) {
  std::vector<Vector> out;
  for (Eigen::Index j = 0; j < s.rank(); ++j) out.emplace_back(s.basis().col(j));
  return out;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_dim(b.ambient_dim(), a.ambient_dim(), "summand");
  auto vs = basis_vectors(a);
  for (auto& v : basis_vectors(b)) vs.push_back(std::move(v));
  return span_in(a.ambient_dim(), vs, a.rank_tol());
}

}  // namespace snlkit
