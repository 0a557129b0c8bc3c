#include "snlkit/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace snlkit {

RestrictedForm::RestrictedForm(const Matrix& M, const Subspace& s) : s_(s) {
  require_dim(M.rows(), s.ambient_dim(), "form");
  const Matrix& B = s.basis();
  const Matrix raw = B.transpose() * M * B;
  H_ = 0.5 * (raw + raw.transpose());
  if (H_.rows() == 0) {
    eigenvalues_.resize(0);
    eigenvectors_.resize(0, 0);
    cutoff_ = s.rank_tol();
    return;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(H_);
  eigenvalues_ = eig.eigenvalues();
  eigenvectors_ = eig.eigenvectors();
  cutoff_ = s.rank_tol() * std::max(1.0, eigenvalues_.cwiseAbs().maxCoeff());
}

double RestrictedForm::min_eigenvalue() const {
  return eigenvalues_.size() == 0 ? 0.0 : eigenvalues_.minCoeff();
}

double RestrictedForm::max_eigenvalue() const {
  return eigenvalues_.size() == 0 ? 0.0 : eigenvalues_.maxCoeff();
}

ExtReal RestrictedForm::infimum(const Vector& g, double scale, Vector* argmin) const {
  require_dim(g.size(), H_.rows(), "linear term");
  if (H_.rows() == 0) {
    if (argmin) argmin->resize(0);
    return ExtReal::finite(0.0);
  }
  const Vector c = eigenvectors_.transpose() * g;
  double null_sq = 0.0;
  double value = 0.0;
  Vector coeff = Vector::Zero(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (eigenvalues_[i] <= cutoff_) {
      null_sq += c[i] * c[i];
    } else {
      coeff[i] = c[i] / eigenvalues_[i];
      value -= 0.5 * c[i] * coeff[i];
    }
  }
  if (std::sqrt(null_sq) > s_.rank_tol() * std::max(scale, g.norm())) return ExtReal::neg_inf();
  if (argmin) *argmin = eigenvectors_ * coeff;
  return ExtReal::finite(value);
}

namespace {

void check_dims(const SnlSpace& space, const Subspace& a) {
  if (a.ambient_dim() != space.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "subspace lives in R^" + std::to_string(a.ambient_dim()) + ", space is R^" +
                    std::to_string(space.dim()));
  }
}

// sign = +1 tests positive semidefiniteness, -1 negative.
CheckReport semidefinite(const Matrix& M, const Subspace& a, double tol, int sign,
                         std::string criterion) {
  RestrictedForm form(M, a);
  CheckReport r;
  r.criterion = std::move(criterion);
  r.tolerance = tol;
  r.add("rank", static_cast<double>(a.rank()));
  r.add_series("eigenvalues", form.eigenvalues());
  if (a.is_zero()) {
    r.status = Status::Pass;
    return r;
  }
  const Vector& ev = form.eigenvalues();
  const double top = std::max(1.0, ev.cwiseAbs().maxCoeff());
  // Worst eigenvalue in the direction that would break the sign condition.
  const Eigen::Index idx = sign > 0 ? 0 : ev.size() - 1;
  const double worst = sign * ev[idx];
  r.add("min_eigenvalue", ev.minCoeff()).add("max_eigenvalue", ev.maxCoeff());
  if (worst >= -tol * top) {
    r.status = Status::Pass;
  } else {
    r.status = Status::Fail;
    r.add_witness("w", a.basis() * form.eigenvectors().col(idx));
  }
  return r;
}

}  // namespace

CheckReport is_positive(const SnlSpace& space, const Subspace& a, double tol) {
  check_dims(space, a);
  return semidefinite(space.L(), a, tol, +1, "restricted-form-psd");
}

CheckReport is_negative(const SnlSpace& space, const Subspace& a, double tol) {
  check_dims(space, a);
  return semidefinite(space.L(), a, tol, -1, "restricted-form-nsd");
}

CheckReport is_maximally_positive(const SnlSpace& space, const Subspace& a, double tol) {
  check_dims(space, a);
  const Matrix& Ld = space.dual_map();
  if (!is_positive(space, a, tol).passed()) {
    throw Error(ErrorCode::NotPositive, "maximality is only defined for L-positive subspaces");
  }
  const Subspace p = polar(a);
  CheckReport neg = semidefinite(Ld, p, tol, -1, "Thm7.2a");
  CheckReport r;
  r.criterion = "Thm7.2a";
  r.tolerance = tol;
  r.status = neg.status;
  r.add("rank", static_cast<double>(a.rank())).add("polar_rank", static_cast<double>(p.rank()));
  for (const auto& e : neg.evidence) {
    if (e.name != "rank") r.add("polar_" + e.name, e.value);
  }
  r.add_series("polar_eigenvalues", neg.series.front().values);
  if (const Vector* w = neg.witness("w")) {
    r.add_witness("polar_witness", *w);
    r.add_witness("extension", Ld * *w);
  }
  return r;
}

CheckReport is_maximally_negative(const SnlSpace& space, const Subspace& a, double tol) {
  check_dims(space, a);
  const Matrix& Ld = space.dual_map();
  if (!is_negative(space, a, tol).passed()) {
    throw Error(ErrorCode::NotNegative, "maximality is only defined for L-negative subspaces");
  }
  const Subspace p = polar(a);
  CheckReport pos = semidefinite(Ld, p, tol, +1, "polar-dual-psd");
  CheckReport r;
  r.criterion = "polar-dual-psd";
  r.tolerance = tol;
  r.status = pos.status;
  r.add("rank", static_cast<double>(a.rank())).add("polar_rank", static_cast<double>(p.rank()));
  for (const auto& e : pos.evidence) {
    if (e.name != "rank") r.add("polar_" + e.name, e.value);
  }
  r.add_series("polar_eigenvalues", pos.series.front().values);
  if (const Vector* w = pos.witness("w")) {
    r.add_witness("polar_witness", *w);
    r.add_witness("extension", Ld * *w);
  }
  return r;
}

namespace {

// inf_{a in A} q(d - a) depends only on the component r of d orthogonal to A.
ExtReal infimum_with(const SnlSpace& space, const RestrictedForm& form, const Vector& d) {
  const Subspace& a = form.subspace();
  const Vector r = a.residual(d);
  const double base = q(space, r);
  if (a.is_zero()) return ExtReal::finite(base);
  const Vector g = a.basis().transpose() * (space.L() * r);
  return ExtReal::finite(base) + form.infimum(g, r.norm());
}

void require_positive(const SnlSpace& space, const Subspace& a, double tol) {
  if (!is_positive(space, a, tol).passed()) {
    throw Error(ErrorCode::NotPositive, "subspace is not L-positive");
  }
}

}  // namespace

ExtReal inf_q_over(const SnlSpace& space, const Subspace& a, const Vector& d, double tol) {
  check_dims(space, a);
  require_dim(d.size(), space.dim(), "d");
  require_positive(space, a, tol);
  return infimum_with(space, RestrictedForm(space.L(), a), d);
}

std::optional<Vector> extension_oracle(const SnlSpace& space, const Subspace& a, int trials,
                                       std::uint64_t seed, double tol) {
  check_dims(space, a);
  require_positive(space, a, tol);
  const auto n = space.dim();
  const RestrictedForm form(space.L(), a);

  // Directions on which q is nonnegative: a cheap source of promising candidates
  // that does not look at the polar of A.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(space.L());
  std::vector<Eigen::Index> nonneg;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (eig.eigenvalues()[i] >= 0.0) nonneg.push_back(i);
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  auto gaussian = [&](Eigen::Index m) {
    Vector v(m);
    for (Eigen::Index i = 0; i < m; ++i) v[i] = normal(rng);
    return v;
  };
  auto point_of_a = [&] {
    if (a.is_zero()) return Vector(Vector::Zero(n));
    return Vector(a.basis() * (3.0 * gaussian(a.rank())));
  };

  for (int k = 0; k < trials; ++k) {
    Vector d;
    switch (k % 3) {
      case 0:
        d = gaussian(n);
        break;
      case 1:
        d = point_of_a() + std::pow(10.0, -2.0 * unit(rng)) * gaussian(n);
        break;
      default: {
        Vector v = Vector::Zero(n);
        for (auto i : nonneg) v += normal(rng) * eig.eigenvectors().col(i);
        d = point_of_a() + (nonneg.empty() ? gaussian(n) : v);
        break;
      }
    }
    const double dist = a.residual(d).norm();
    if (dist <= tol * std::max(1.0, d.norm())) continue;
    if (infimum_with(space, form, d) >= -tol * dist * dist) return d;
  }
  return std::nullopt;
}

CheckReport assess_maximality(const SnlSpace& space, const Subspace& a, int trials,
                              std::uint64_t seed, double tol) {
  const auto witness = extension_oracle(space, a, trials, seed, tol);
  CheckReport r;
  if (space.has_dual()) {
    r = is_maximally_positive(space, a, tol);
  } else {
    r.criterion = "extension-oracle";
    r.tolerance = tol;
    r.status = witness ? Status::Fail : Status::Inconclusive;
    r.notes.push_back("no dual structure: maximality is not decidable by the polar criterion");
  }
  r.add("oracle_trials", trials).add("oracle_found_witness", witness ? 1.0 : 0.0);
  if (witness) r.add_witness("oracle_extension", *witness);
  return r;
}

CheckReport bidual_positivity_check(const SnlSpace& space, const Subspace& a, double tol) {
  check_dims(space, a);
  space.dual_map();
  require_positive(space, a, tol);
  const Subspace pp = polar(polar(a));
  const bool same = same_subspace(pp, a);
  CheckReport form = semidefinite(space.L(), pp, tol, +1, "bidual-psd");
  CheckReport r;
  r.criterion = "bidual-psd";
  r.tolerance = tol;
  r.add("same_subspace", same ? 1.0 : 0.0)
      .add("bidual_rank", static_cast<double>(pp.rank()))
      .add("rank", static_cast<double>(a.rank()));
  r.add_series("bidual_eigenvalues", form.series.front().values);
  r.status = (same && form.passed()) ? Status::Pass : Status::Fail;
  if (!form.passed()) {
    r.add_witness("w", *form.witness("w"));
  } else if (!same) {
    // Some basis vector of one subspace that the other does not contain.
    for (Eigen::Index j = 0; j < pp.rank(); ++j) {
      if (!contains(a, pp.basis().col(j))) {
        r.add_witness("w", pp.basis().col(j));
        break;
      }
    }
    if (r.witnesses.empty()) {
      for (Eigen::Index j = 0; j < a.rank(); ++j) {
        if (!contains(pp, a.basis().col(j))) {
          r.add_witness("w", a.basis().col(j));
          break;
        }
      }
    }
  }
  return r;
}

bool extension_keeps_positive(const SnlSpace& space, const Subspace& a, const Vector& d,
                              double tol) {
  auto vs = basis_vectors(a);
  vs.push_back(d);
  return is_positive(space, span_in(space.dim(), vs), tol).passed();
}

}  // namespace snlkit
