#include "snlkit/snl_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace snlkit {

namespace {

double entry_scale(const Matrix& L) { return std::max(1.0, L.cwiseAbs().maxCoeff()); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Checks symmetry and ||L|| <= 1. Returns the spectral norm.
double validate_snl_map(const Matrix& L, double tol) {
  if (L.rows() < 1 || L.rows() != L.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "SNL map must be a non-empty square matrix");
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::ValidationError, "tolerance must be positive");
  }
  if (!L.allFinite()) {
    throw Error(ErrorCode::ValidationError, "SNL map has non-finite entries");
  }
  const double scale = entry_scale(L);
  const double asym = max_asymmetry(L);
  if (asym > tol * scale) {
    throw Error(ErrorCode::NotSymmetric, "max |L_ij - L_ji| = " + fmt(asym));
  }
  const Matrix sym = 0.5 * (L + L.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
  const double norm = eig.eigenvalues().cwiseAbs().maxCoeff();
  if (norm > 1.0 + tol * scale) {
    throw Error(ErrorCode::NormExceedsOne, "top singular value = " + fmt(norm));
  }
  return norm;
}

bool is_involution(const Matrix& L, double tol) {
  const Matrix r = L * L - Matrix::Identity(L.rows(), L.cols());
  return r.cwiseAbs().maxCoeff() <= tol * entry_scale(L);
}

}  // namespace

double max_asymmetry(const Matrix& L) { return (L - L.transpose()).cwiseAbs().maxCoeff(); }

const Matrix& SnlSpace::dual_map() const {
  if (!dual_) throw Error(ErrorCode::NoDual, "space has no SNL dual (L*L != I)");
  return *dual_;
}

SnlSpace SnlSpace::negated() const {
  std::optional<Matrix> d;
  if (dual_) d = -*dual_;
  SnlSpace s(-L_, std::move(d), tol_);
  return s;
}

SnlSpace SnlSpace::dual_space() const {
  SnlSpace s(dual_map(), L_, tol_);
  s.product_edim_ = product_edim_;
  return s;
}

SnlSpace SnlSpace::with_claimed_dual(const Matrix& L, const Matrix& claimed_dual, double tol) {
  validate_snl_map(L, tol);
  if (claimed_dual.rows() != L.rows() || claimed_dual.cols() != L.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "claimed dual has the wrong shape");
  }
  return SnlSpace(L, claimed_dual, tol);
}

SnlSpace make_snl_space(const Matrix& L, double tol) {
  validate_snl_map(L, tol);
  std::optional<Matrix> dual;
  if (is_involution(L, tol)) dual = L;
  return SnlSpace(L, std::move(dual), tol);
}

SnlSpace make_product_space(Eigen::Index d) {
  if (d < 1) throw Error(ErrorCode::ValidationError, "product dimension must be >= 1");
  Matrix L = Matrix::Zero(2 * d, 2 * d);
  L.topRightCorner(d, d).setIdentity();
  L.bottomLeftCorner(d, d).setIdentity();
  SnlSpace s(L, L, kDefaultTol);
  s.product_edim_ = d;
  return s;
}

double q(const SnlSpace& space, const Vector& b) {
  require_dim(b.size(), space.dim(), "b");
  return 0.5 * b.dot(space.L() * b);
}

double q_dual(const SnlSpace& space, const Vector& bstar) {
  const Matrix& Ld = space.dual_map();
  require_dim(bstar.size(), space.dim(), "b*");
  return 0.5 * bstar.dot(Ld * bstar);
}

Vector duality_map(const SnlSpace& space, const Vector& c) {
  require_dim(c.size(), space.dim(), "c");
  return c;
}

CheckReport validate_dual(const SnlSpace& space, int samples, std::uint64_t seed) {
  const Matrix& Ld = space.dual_map();
  const auto n = space.dim();
  const Matrix& L = space.L();

  constexpr double kTol = 1e-10;
  CheckReport r;
  r.criterion = "dual-identities";
  r.tolerance = kTol;

  const double compose =
      (Ld * L - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  auto draw = [&] {
    Vector v(n);
    for (auto i = 0; i < n; ++i) v[i] = normal(rng);
    return v;
  };

  double worst_sum = 0.0, worst_iso = 0.0, worst_pos = 0.0;
  Vector worst_b, worst_bs;
  for (int k = 0; k < samples; ++k) {
    const Vector b = draw();
    const Vector bs = draw();
    const Vector Lb = L * b;

    const double lhs = q_dual(space, bs + Lb);
    const double rhs = q_dual(space, bs) + b.dot(bs) + q(space, b);
    const double scale = std::pow(b.norm() + bs.norm(), 2);
    const double sum_res = std::abs(lhs - rhs) / scale;
    const double iso = std::abs(Lb.norm() - b.norm()) / b.norm();
    // q~ + 1/2 |.|^2 must be nonnegative; record how far below zero it dips.
    const double pos = -(q_dual(space, bs) + 0.5 * bs.squaredNorm()) / bs.squaredNorm();

    const double bad = std::max({sum_res, iso, pos});
    if (worst_b.size() == 0 || bad > std::max({worst_sum, worst_iso, worst_pos})) {
      worst_b = b;
      worst_bs = bs;
    }
    worst_sum = std::max(worst_sum, sum_res);
    worst_iso = std::max(worst_iso, iso);
    worst_pos = std::max(worst_pos, pos);
  }

  r.add("samples", samples)
      .add("compose_residual", compose)
      .add("sum_identity_max_residual", worst_sum)
      .add("isometry_max_residual", worst_iso)
      .add("dual_coercivity_max_violation", worst_pos);

  const bool ok = worst_sum <= kTol && worst_iso <= kTol && worst_pos <= kTol;
  r.status = ok ? Status::Pass : Status::Fail;
  if (!ok) r.add_witness("b", worst_b).add_witness("bstar", worst_bs);
  return r;
}

}  // namespace snlkit
