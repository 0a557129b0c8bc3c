#include "snlkit/fixtures.hpp"

#include <cmath>
#include <random>

namespace snlkit::fixtures {

std::vector<std::string> names() {
  return {"identity", "negidentity", "swap3", "cyclic3",
          "line-1m12", "helix", "scaled-helix", "product"};
}

Matrix matrix(const std::string& name, Eigen::Index size) {
  if (name == "identity") return Matrix::Identity(size > 0 ? size : 3, size > 0 ? size : 3);
  if (name == "negidentity") return -Matrix::Identity(size > 0 ? size : 3, size > 0 ? size : 3);
  if (name == "swap3" || name == "line-1m12" || name == "helix" || name == "scaled-helix") {
    Matrix l(3, 3);
    l << 0, 1, 0, 1, 0, 0, 0, 0, 1;
    return l;
  }
  if (name == "cyclic3") {
    Matrix l(3, 3);
    l << 0, 1, 0, 0, 0, 1, 1, 0, 0;
    return l;
  }
  if (name == "product") return make_product_space(size > 0 ? size : 1).L();
  throw Error(ErrorCode::UnknownFixture, "no fixture named '" + name + "'");
}

SnlSpace space(const std::string& name, Eigen::Index size) {
  if (name == "product") return make_product_space(size > 0 ? size : 1);
  return make_snl_space(matrix(name, size));
}

Subspace line_1m12() { return span({Vector((Vector(3) << 1, -1, 2).finished())}); }

Vector helix_point(double theta, double lambda) {
  return (Vector(3) << std::cos(theta), std::sin(theta), lambda * theta).finished();
}

namespace {

// q(h(t) - h(s)) under swap3: (dx)(dy) + 1/2 (dz)^2.
double pair_q(double t, double s, double lambda) {
  const double dx = std::cos(t) - std::cos(s);
  const double dy = std::sin(t) - std::sin(s);
  const double dz = lambda * (t - s);
  return dx * dy + 0.5 * dz * dz;
}

CheckReport finish(const HelixOptions& opts, std::string criterion, double best, double bt,
                   double bs, long pairs) {
  CheckReport r;
  r.criterion = std::move(criterion);
  r.tolerance = opts.tol;
  r.add("lambda", opts.lambda)
      .add("pairs", static_cast<double>(pairs))
      .add("theta_max", opts.theta_max)
      .add("min_pair_q", best);
  r.status = best >= -opts.tol ? Status::Pass : Status::Fail;
  if (r.status == Status::Fail) {
    r.add_witness("theta", Vector::Constant(1, bt))
        .add_witness("phi", Vector::Constant(1, bs))
        .add_witness("b", helix_point(bt, opts.lambda))
        .add_witness("c", helix_point(bs, opts.lambda));
  }
  return r;
}

}  // namespace

CheckReport helix_scan(const HelixOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> theta(-opts.theta_max, opts.theta_max);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double best = std::numeric_limits<double>::infinity();
  double bt = 0.0, bs = 0.0;
  for (long k = 0; k < opts.samples; ++k) {
    const double t = theta(rng);
    double s;
    if (k % 2 == 0) {
      s = theta(rng);
    } else {
      const double jitter = (2.0 * unit(rng) - 1.0) * std::pow(10.0, -4.0 * unit(rng));
      s = t + jitter;
    }
    const double v = pair_q(t, s, opts.lambda);
    if (v < best) {
      best = v;
      bt = t;
      bs = s;
    }
  }
  return finish(opts, "helix-pairwise-sample", best, bt, bs, opts.samples);
}

CheckReport helix_search(const HelixOptions& opts) {
  const double lo = -opts.theta_max, hi = opts.theta_max;
  constexpr int kCoarse = 400;
  double step = (hi - lo) / kCoarse;
  double best = std::numeric_limits<double>::infinity();
  double bt = 0.0, bs = 0.0;
  long pairs = 0;
  for (int i = 0; i <= kCoarse; ++i) {
    for (int j = 0; j <= kCoarse; ++j) {
      const double t = lo + i * step, s = lo + j * step;
      const double v = pair_q(t, s, opts.lambda);
      ++pairs;
      if (v < best) {
        best = v;
        bt = t;
        bs = s;
      }
    }
  }
  // Local refinement: shrink a 21 x 21 stencil around the incumbent.
  for (int round = 0; round < 30; ++round) {
    step *= 0.5;
    const double ct = bt, cs = bs;
    for (int i = -10; i <= 10; ++i) {
      for (int j = -10; j <= 10; ++j) {
        const double t = ct + i * step * 0.1, s = cs + j * step * 0.1;
        const double v = pair_q(t, s, opts.lambda);
        ++pairs;
        if (v < best) {
          best = v;
          bt = t;
          bs = s;
        }
      }
    }
  }
  return finish(opts, "helix-grid-search", best, bt, bs, pairs);
}

}  // namespace snlkit::fixtures
