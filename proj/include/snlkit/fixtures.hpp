#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snlkit/report.hpp"
#include "snlkit/snl_space.hpp"
#include "snlkit/subspace.hpp"

namespace snlkit::fixtures {

/// Named example matrices and spaces.
///   identity, negidentity   +-I on R^n (default n = 3)
///   swap3                   (b1, b2, b3) -> (b2, b1, b3)
///   cyclic3                 (b1, b2, b3) -> (b2, b3, b1); not symmetric
///   line-1m12               swap3 with the subspace R(1, -1, 2)
///   product                 E x E* with E = R^d (default d = 1)
///   helix, scaled-helix     point sets, see helix_scan / helix_search
std::vector<std::string> names();

/// Raw matrix of a named fixture (cyclic3 included, so callers can watch it fail validation).
Matrix matrix(const std::string& name, Eigen::Index size = 0);

/// Validated space. Throws UnknownFixture, or the validation error for cyclic3.
SnlSpace space(const std::string& name, Eigen::Index size = 0);

/// The line R(1, -1, 2) in R^3.
Subspace line_1m12();

/// (cos t, sin t, lambda * t).
Vector helix_point(double theta, double lambda);

struct HelixOptions {
  double lambda = 1.0;
  long samples = 1000000;
  std::uint64_t seed = 0;
  double theta_max = 20.0;
  double tol = 1e-12;
};

/// Samples pairs on the helix (half uniform, half near-diagonal with a jitter
/// spread over several scales) and reports the minimum of q(h(t) - h(s))
/// under the swap3 map. Fail iff the minimum is below -tol; the witness pair
/// is stored as the points ("b", "c") and the parameters ("theta", "phi").
CheckReport helix_scan(const HelixOptions& opts);

/// Coarse grid over [-theta_max, theta_max]^2 refined locally around the best
/// cell. Fail (a certified violation) iff the best value is below -tol.
CheckReport helix_search(const HelixOptions& opts);

}  // namespace snlkit::fixtures
