#include "snlkit/instances.hpp"

namespace snlkit::instances {

namespace {

Eigen::Index uniform_index(Eigen::Index lo, Eigen::Index hi, Rng& rng) {
  return std::uniform_int_distribution<Eigen::Index>(lo, hi)(rng);
}

double uniform(double lo, double hi, Rng& rng) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Matrix gaussian_matrix(Eigen::Index r, Eigen::Index c, Rng& rng) {
  std::normal_distribution<double> normal;
  Matrix m(r, c);
  for (Eigen::Index j = 0; j < c; ++j)
    for (Eigen::Index i = 0; i < r; ++i) m(i, j) = normal(rng);
  return m;
}

}  // namespace

Vector gaussian(Eigen::Index n, Rng& rng) { return gaussian_matrix(n, 1, rng).col(0); }

Matrix random_orthogonal(Eigen::Index n, Rng& rng) {
  const Matrix g = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  return q;
}

Matrix random_involution(Eigen::Index n, Eigen::Index plus, Rng& rng, Matrix* q_out) {
  const Matrix q = random_orthogonal(n, rng);
  Vector diag = -Vector::Ones(n);
  diag.head(plus).setOnes();
  Matrix l = q * diag.asDiagonal() * q.transpose();
  l = 0.5 * (l + l.transpose());
  if (q_out) *q_out = q;
  return l;
}

Matrix random_contraction(Eigen::Index m, Eigen::Index p, double norm, Rng& rng) {
  if (m == 0 || p == 0) return Matrix::Zero(m, p);
  Matrix k = gaussian_matrix(m, p, rng);
  Eigen::JacobiSVD<Matrix> svd(k);
  const double top = svd.singularValues()[0];
  return top > 0 ? Matrix(k * (norm / top)) : k;
}

Subspace random_subspace(Eigen::Index n, Eigen::Index k, Rng& rng) {
  if (k == 0) return Subspace(n);
  return Subspace::from_columns(gaussian_matrix(n, k, rng));
}

PositiveInstance random_positive_instance(Rng& rng, Eigen::Index max_dim, bool maximal) {
  const Eigen::Index n = uniform_index(2, max_dim, rng);
  const Eigen::Index plus = maximal ? uniform_index(0, n, rng) : uniform_index(1, n, rng);
  const Eigen::Index minus = n - plus;
  Matrix q;
  const Matrix l = random_involution(n, plus, rng, &q);

  // Contraction norm: mostly strict, sometimes exactly one (neutral directions).
  const double norm = uniform(0.0, 1.0, rng) < 0.2 ? 1.0 : uniform(0.0, 0.99, rng);
  const Matrix k = random_contraction(minus, plus, norm, rng);

  const Eigen::Index dom = maximal ? plus : uniform_index(0, plus - 1, rng);
  Matrix u = dom == plus ? Matrix(Matrix::Identity(plus, plus))
                         : Matrix(gaussian_matrix(plus, dom, rng));
  Matrix cols(n, dom);
  cols.topRows(plus) = u;
  cols.bottomRows(minus) = k * u;
  Subspace a = dom == 0 ? Subspace(n) : Subspace::from_columns(q * cols);
  return {make_snl_space(l), std::move(a), maximal, plus};
}

Matrix random_monotone_matrix(Eigen::Index d, Rng& rng) {
  const Eigen::Index r = uniform_index(0, d, rng);
  const Matrix g = gaussian_matrix(d, r, rng);
  const Matrix psd = g * g.transpose() * uniform(0.1, 1.0, rng);
  const Matrix h = gaussian_matrix(d, d, rng);
  const Matrix skew = (h - h.transpose()) * uniform(0.0, 1.0, rng);
  return psd + skew;
}

RelationInstance random_relation(Rng& rng, Eigen::Index max_edim, bool maximal) {
  const Eigen::Index d = uniform_index(1, max_edim, rng);
  const Matrix m = random_monotone_matrix(d, rng);

  // Maximal relation over a random domain U, with U^perp as multivalued part.
  const bool whole_domain = uniform(0.0, 1.0, rng) < 0.5;
  const Eigen::Index udim = whole_domain ? d : uniform_index(0, d, rng);
  const Subspace u = udim == d ? Subspace::full(d) : random_subspace(d, udim, rng);
  const Subspace uperp = polar(u);
  Matrix cols(2 * d, d);
  cols.setZero();
  for (Eigen::Index j = 0; j < u.rank(); ++j) {
    const Vector x = u.basis().col(j);
    cols.col(j).head(d) = x;
    cols.col(j).tail(d) = u.project(m * x);
  }
  for (Eigen::Index j = 0; j < uperp.rank(); ++j) {
    cols.col(u.rank() + j).tail(d) = uperp.basis().col(j);
  }
  Subspace full = Subspace::from_columns(cols);
  if (maximal) return {LinearRelation(d, std::move(full)), true};

  const Eigen::Index k = uniform_index(0, d - 1, rng);
  if (k == 0) return {LinearRelation(d, Subspace(2 * d)), false};
  const Matrix coeff = gaussian_matrix(full.rank(), k, rng);
  return {LinearRelation(d, Subspace::from_columns(full.basis() * coeff)), false};
}

}  // namespace snlkit::instances
