#include "snlkit/convex.hpp"

#include <cmath>
#include <limits>

namespace snlkit {

bool SubgradientSet::contains(const Vector& s, double tol) const {
  if (empty) return false;
  return snlkit::contains(directions, s - anchor, tol);
}

double SubgradientSet::distance(const Vector& s) const {
  if (empty) return std::numeric_limits<double>::infinity();
  return directions.residual(s - anchor).norm();
}

QuadraticOnAffine make_function(const SnlSpace& space, const Subspace& a, const Vector& d,
                                FunctionKind kind, double tol) {
  require_dim(d.size(), space.dim(), "shift");
  require_dim(a.ambient_dim(), space.dim(), "subspace");
  if (!is_positive(space, a, tol).passed()) {
    throw Error(ErrorCode::NotPositive, "q^C is only convex when A is L-positive");
  }
  return QuadraticOnAffine(space, shift(a, d), kind, RestrictedForm(space.L(), a));
}

ExtReal eval(const QuadraticOnAffine& f, const Vector& b) {
  require_dim(b.size(), f.space().dim(), "b");
  if (!f.domain().contains(b, f.member_tol())) return ExtReal::pos_inf();
  double v = q(f.space(), b);
  if (f.kind() == FunctionKind::P) v += 0.5 * b.squaredNorm();
  return ExtReal::finite(v);
}

ExtReal conjugate(const QuadraticOnAffine& f, const Vector& bstar) {
  if (f.kind() != FunctionKind::Q) throw Error(ErrorCode::NotQ, "closed-form conjugate is for q^C");
  require_dim(bstar.size(), f.space().dim(), "b*");
  const Vector& c0 = f.anchor();
  const Subspace& a = f.domain().direction;
  // sup_t <c0 + Bt, b*> - q(c0 + Bt) = <c0, b*> - q(c0) - inf_t [1/2 t'Ht - t'g]
  const double base = c0.dot(bstar) - q(f.space(), c0);
  if (a.is_zero()) return ExtReal::finite(base);
  const Vector g = a.basis().transpose() * (bstar - f.space().L() * c0);
  const ExtReal inner = f.form().infimum(g, bstar.norm() + c0.norm());
  return ExtReal::finite(base) - inner;
}

namespace {

SubgradientSet subgradients(const QuadraticOnAffine& f, const Vector& b, const Vector& anchor) {
  SubgradientSet s;
  s.directions = Subspace(f.space().dim());
  if (!f.domain().contains(b, f.member_tol())) return s;
  s.empty = false;
  s.anchor = anchor;
  s.directions = polar(f.domain().direction);
  return s;
}

}  // namespace

SubgradientSet subdiff_q(const QuadraticOnAffine& f, const Vector& b) {
  if (f.kind() != FunctionKind::Q) throw Error(ErrorCode::NotQ, "subdiff_q needs q^C");
  require_dim(b.size(), f.space().dim(), "b");
  return subgradients(f, b, f.space().L() * b);
}

SubgradientSet subdiff_p(const QuadraticOnAffine& f, const Vector& b) {
  if (f.kind() != FunctionKind::P) throw Error(ErrorCode::NotP, "subdiff_p needs p^C");
  require_dim(b.size(), f.space().dim(), "b");
  return subgradients(f, b, f.space().L() * b + duality_map(f.space(), b));
}

Minimum tilted_minimum(const QuadraticOnAffine& f, const Vector& bstar) {
  if (f.kind() != FunctionKind::P) throw Error(ErrorCode::NotP, "exact minimisation needs p^C");
  require_dim(bstar.size(), f.space().dim(), "b*");
  const Vector& c0 = f.anchor();
  const Subspace& a = f.domain().direction;
  // With b = c0 + Bt and B^T c0 = 0:
  //   p(b) - <b, b*> = p(c0) - <c0, b*> + 1/2 t'(H + I)t - t'g,  g = B^T(b* - L c0).
  double value = q(f.space(), c0) + 0.5 * c0.squaredNorm() - c0.dot(bstar);
  if (a.is_zero()) return {value, c0};
  const Vector g = a.basis().transpose() * (bstar - f.space().L() * c0);
  const RestrictedForm& form = f.form();
  const Vector c = form.eigenvectors().transpose() * g;
  Vector coeff(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    coeff[i] = c[i] / (form.eigenvalues()[i] + 1.0);
    value -= 0.5 * c[i] * coeff[i];
  }
  const Vector t = form.eigenvectors() * coeff;
  return {value, c0 + a.basis() * t};
}

Minimum inf_pC(const QuadraticOnAffine& f) {
  return tilted_minimum(f, Vector::Zero(f.space().dim()));
}

ExtReal fenchel_residual(const QuadraticOnAffine& f, const Vector& b, const Vector& s) {
  const ExtReal fb = eval(f, b);
  if (!fb.is_finite()) return ExtReal::pos_inf();
  const ExtReal fs = f.kind() == FunctionKind::Q ? conjugate(f, s)
                                                 : ExtReal::finite(-tilted_minimum(f, s).value);
  return fb + fs - ExtReal::finite(b.dot(s));
}

RefinedPair br_refine(const QuadraticOnAffine& f, const Vector& b0, const Vector& b0star,
                      double eta) {
  if (f.kind() != FunctionKind::P) throw Error(ErrorCode::NotP, "br_refine needs p^C");
  require_dim(b0.size(), f.space().dim(), "b0");
  require_dim(b0star.size(), f.space().dim(), "b0*");
  if (!(eta >= 0.0)) throw Error(ErrorCode::PreconditionViolated, "eta must be nonnegative");

  const ExtReal fb0 = eval(f, b0);
  if (!fb0.is_finite()) {
    throw Error(ErrorCode::PreconditionViolated, "b0 is not in the domain of p^C");
  }
  const Minimum m = tilted_minimum(f, b0star);
  const double conj = -m.value;
  const double pairing = b0.dot(b0star);
  const double gap = fb0.value() + conj - pairing;
  const double slack =
      kDefaultTol * std::max({1.0, std::abs(fb0.value()), std::abs(conj), std::abs(pairing)});
  if (gap > eta * eta + slack) {
    throw Error(ErrorCode::PreconditionViolated,
                "f(b0) + f*(b0*) - <b0, b0*> = " + ExtReal::finite(gap).str() +
                    " exceeds eta^2 = " + ExtReal::finite(eta * eta).str());
  }

  RefinedPair out;
  out.b1 = m.argmin;
  out.b1star = b0star;
  out.gap = gap;
  out.distance = (out.b1 - b0).norm();
  out.bound = std::sqrt(2.0) * eta;
  const ExtReal res = fenchel_residual(f, out.b1, out.b1star);
  out.subgradient_residual = res.to_double();

  CheckReport& r = out.report;
  r.criterion = "strongly-convex-refinement";
  r.tolerance = 1e-9;
  r.add("gap", gap)
      .add("eta", eta)
      .add("distance", out.distance)
      .add("distance_bound", out.bound)
      .add("dual_distance", 0.0)
      .add("subgradient_residual", out.subgradient_residual);
  r.notes.push_back("constructive bound |b1 - b0| <= sqrt(2) * eta from 1-strong convexity");
  const bool ok = res.is_finite() && std::abs(res.value()) <= 1e-9 && out.distance <= out.bound;
  r.status = ok ? Status::Pass : Status::Fail;
  r.add_witness("b1", out.b1).add_witness("b1star", out.b1star);
  return out;
}

}  // namespace snlkit
