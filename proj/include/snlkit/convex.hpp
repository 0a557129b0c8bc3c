#pragma once

#include "snlkit/positivity.hpp"
#include "snlkit/report.hpp"
#include "snlkit/snl_space.hpp"
#include "snlkit/subspace.hpp"

namespace snlkit {

enum class FunctionKind {
  Q,  // q_L on C, +inf elsewhere
  P,  // q_L + 1/2 |.|^2 on C, +inf elsewhere
};

/// q_L (kind Q) or q_L + 1/2|.|^2 (kind P) restricted to an affine set
/// C = A - d with A L-positive, and +inf off C. Both are proper and convex;
/// the P variant is 1-strongly convex on C.
///
/// C is parametrised as anchor + basis * t, where the anchor is the point of C
/// nearest the origin (so it is orthogonal to A).
class QuadraticOnAffine {
 public:
  const SnlSpace& space() const noexcept { return space_; }
  const AffineSet& domain() const noexcept { return c_; }
  FunctionKind kind() const noexcept { return kind_; }
  const Vector& anchor() const noexcept { return anchor_; }
  const RestrictedForm& form() const noexcept { return form_; }
  double member_tol() const noexcept { return member_tol_; }

 private:
  QuadraticOnAffine(SnlSpace space, AffineSet c, FunctionKind kind, RestrictedForm form)
      : space_(std::move(space)),
        c_(std::move(c)),
        kind_(kind),
        anchor_(c_.nearest_to_origin()),
        form_(std::move(form)) {}

  SnlSpace space_;
  AffineSet c_;
  FunctionKind kind_;
  Vector anchor_;
  RestrictedForm form_;
  double member_tol_ = 1e-9;

  friend QuadraticOnAffine make_function(const SnlSpace&, const Subspace&, const Vector&,
                                         FunctionKind, double);
};

/// anchor + directions, or the empty set.
struct SubgradientSet {
  bool empty = true;
  Vector anchor;
  Subspace directions = Subspace(1);

  bool contains(const Vector& s, double tol = 1e-9) const;
  /// Distance from s to the affine set; +inf when empty.
  double distance(const Vector& s) const;
};

/// Builds q^C or p^C for C = A - d. Throws NotPositive unless A is L-positive.
QuadraticOnAffine make_function(const SnlSpace& space, const Subspace& a, const Vector& d,
                                FunctionKind kind, double tol = kDefaultCheckTol);

ExtReal eval(const QuadraticOnAffine& f, const Vector& b);

/// Fenchel conjugate of q^C, sup_b <b, b*> - q^C(b), in closed form.
/// +inf when the linear term leaves the range of the restricted form.
/// Throws NotQ for p^C.
ExtReal conjugate(const QuadraticOnAffine& f, const Vector& bstar);

/// Lb + polar(A) for b in C, empty otherwise. Throws NotQ for p^C.
SubgradientSet subdiff_q(const QuadraticOnAffine& f, const Vector& b);

/// Lb + b + polar(A) for b in C (the duality map is the identity), empty
/// otherwise. Throws NotP for q^C.
SubgradientSet subdiff_p(const QuadraticOnAffine& f, const Vector& b);

struct Minimum {
  double value;
  Vector argmin;
};

/// Exact minimum of b -> p^C(b) - <b, b*> over C; its negative is the conjugate
/// of p^C at b*. Throws NotP for q^C.
Minimum tilted_minimum(const QuadraticOnAffine& f, const Vector& bstar);

/// min_C p^C. Throws NotP for q^C.
Minimum inf_pC(const QuadraticOnAffine& f);

/// f(b) + f*(s) - <b, s> for either kind; +inf when b is off C or f*(s) is infinite.
ExtReal fenchel_residual(const QuadraticOnAffine& f, const Vector& b, const Vector& s);

struct RefinedPair {
  Vector b1;
  Vector b1star;
  double gap;                  // f(b0) + f*(b0*) - <b0, b0*>
  double distance;             // |b1 - b0|
  double bound;                // sqrt(2) * eta
  double subgradient_residual; // f(b1) + f*(b1*) - <b1, b1*>
  CheckReport report;
};

/// Turns an eta^2-approximate subgradient pair (b0, b0*) of p^C into an exact
/// one: b1 minimises p^C - <., b0*>, and b1* = b0*. Strong convexity of p^C
/// gives |b1 - b0| <= sqrt(2) * eta (one factor sqrt(2) weaker than the
/// existence statement). Throws PreconditionViolated if the gap exceeds
/// eta^2 beyond tolerance, NotP for q^C.
RefinedPair br_refine(const QuadraticOnAffine& f, const Vector& b0, const Vector& b0star,
                      double eta);

}  // namespace snlkit
