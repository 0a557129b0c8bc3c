// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "snlkit/cli.hpp"
#include "snlkit/convex.hpp"
#include "snlkit/fixtures.hpp"
#include "snlkit/instances.hpp"
#include "snlkit/positivity.hpp"
#include "snlkit/relations.hpp"

using namespace snlkit;
namespace inst = snlkit::instances;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("unexpected exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s [%2d] %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.c_str(),
              secs);
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Instances whose polar is L~-negative, i.e. maximal by construction.
std::vector<inst::PositiveInstance> maximal_instances(int count, std::uint64_t seed) {
  inst::Rng rng(seed);
  std::vector<inst::PositiveInstance> out;
  while (static_cast<int>(out.size()) < count) {
    out.push_back(inst::random_positive_instance(rng, 10, true));
  }
  return out;
}

Outcome maximality_equivalence() {
  inst::Rng rng(101);
  int total = 0, match = 0, contradictions = 0, nonmax = 0, found = 0, bad_witness = 0;
  for (int i = 0; i < 240; ++i) {
    const bool maximal = i % 2 == 0;
    const auto pi = inst::random_positive_instance(rng, 10, maximal);
    const CheckReport r = is_maximally_positive(pi.space, pi.a, 1e-8);
    ++total;
    if (r.passed() == pi.maximal) ++match;
    const auto w = extension_oracle(pi.space, pi.a, 10000, 7000 + i, 1e-8);
    if (w && !extension_keeps_positive(pi.space, pi.a, *w, 1e-8)) ++bad_witness;
    if (w && r.passed()) ++contradictions;
    if (!pi.maximal) {
      ++nonmax;
      if (w) ++found;
    }
  }
  const double rate = static_cast<double>(found) / nonmax;
  return {match == total && contradictions == 0 && bad_witness == 0 && rate >= 0.99,
          fmt("%d/%d verdicts match, %d contradictions, %d invalid witnesses, oracle found "
              "%d/%d (%.1f%%)",
              match, total, contradictions, bad_witness, found, nonmax, 100.0 * rate)};
}

Outcome inf_pc_vanishes() {
  inst::Rng rng(202);
  double worst = 0.0;
  int cases = 0;
  for (const auto& pi : maximal_instances(60, 203)) {
    for (int k = 0; k < 50; ++k) {
      const Vector d = inst::gaussian(pi.space.dim(), rng) * std::exp(std::uniform_real_distribution<>(-2, 2)(rng));
      const auto f = make_function(pi.space, pi.a, d, FunctionKind::P);
      worst = std::max(worst, std::abs(inf_pC(f).value));
      ++cases;
    }
  }
  return {worst <= 1e-8, fmt("max |inf p^C| = %.3e over %d shifts (bound 1e-8)", worst, cases)};
}

Outcome subdifferential_exact() {
  inst::Rng rng(303);
  double worst_in = 0.0, least_out = INFINITY;
  int cases = 0;
  while (cases < 100) {
    const auto pi = inst::random_positive_instance(rng, 10, cases % 2 == 0);
    if (pi.a.is_zero()) continue;
    const Eigen::Index n = pi.space.dim();
    const Vector d = inst::gaussian(n, rng);
    const auto f = make_function(pi.space, pi.a, d, FunctionKind::Q);
    const Vector b = -d + pi.a.basis() * inst::gaussian(pi.a.rank(), rng);
    const SubgradientSet s = subdiff_q(f, b);
    if (s.empty) return {false, "b in C reported with empty subdifferential"};
    for (int j = 0; j < 10; ++j) {
      Vector sub = s.anchor;
      if (!s.directions.is_zero()) sub += s.directions.basis() * inst::gaussian(s.directions.rank(), rng);
      const ExtReal r = fenchel_residual(f, b, sub);
      worst_in = std::max(worst_in, std::abs(r.to_double()));
      // Push off Lb + A0 by a component inside A of norm >= 1e-3.
      Vector dir = pi.a.basis() * inst::gaussian(pi.a.rank(), rng);
      dir.normalize();
      const double off = 1e-3 * (1.0 + std::uniform_real_distribution<>(0, 9)(rng));
      const Vector pert = sub + off * dir;
      if (s.distance(pert) < 1e-3 * (1 - 1e-9)) return {false, "perturbation too close"};
      least_out = std::min(least_out, fenchel_residual(f, b, pert).to_double());
    }
    ++cases;
  }
  return {worst_in <= 1e-8 && least_out > 1e-7,
          fmt("%d cases x 10: max residual on Lb+A0 = %.3e (<= 1e-8), min residual off it = "
              "%.3e (> 1e-7)",
              cases, worst_in, least_out)};
}

Outcome conjugate_bound() {
  inst::Rng rng(404);
  double worst = -INFINITY;
  int cases = 0;
  for (const auto& pi : maximal_instances(100, 405)) {
    const Eigen::Index n = pi.space.dim();
    const auto f = make_function(pi.space, pi.a, inst::gaussian(n, rng), FunctionKind::Q);
    for (int k = 0; k < 100; ++k) {
      const Vector bs = inst::gaussian(n, rng) * 3.0;
      const ExtReal c = conjugate(f, bs);
      ++cases;
      if (!c.is_finite()) continue;  // -conj = -inf
      worst = std::max(worst, -c.value() - 0.5 * bs.squaredNorm());
    }
  }
  return {worst <= 1e-9,
          fmt("max of -(q^C)*(b*) - |b*|^2/2 = %.3e over %d pairs (bound 1e-9)", worst, cases)};
}

std::vector<inst::RelationInstance> relation_ensemble(int count, std::uint64_t seed) {
  inst::Rng rng(seed);
  std::vector<inst::RelationInstance> out;
  for (int i = 0; i < count; ++i) out.push_back(inst::random_relation(rng, 5, i % 2 == 0));
  return out;
}

Outcome ni_pattern() {
  int violations = 0, wrong_label = 0, total = 0;
  for (const auto& ri : relation_ensemble(220, 505)) {
    const CheckReport r = is_type_ni(ri.relation, 1e-8, {200, static_cast<std::uint64_t>(total)});
    if (*r.value("pattern_ok") == 0.0) ++violations;
    if ((*r.value("polar_negative") != 0.0) != ri.maximal) ++wrong_label;
    ++total;
  }
  return {violations == 0 && wrong_label == 0,
          fmt("%d relations: %d pattern violations, %d exact-verdict mismatches vs ground truth",
              total, violations, wrong_label)};
}

Outcome brezis_browder() {
  int violations = 0, wrong = 0, total = 0;
  for (const auto& ri : relation_ensemble(220, 606)) {
    const CheckReport r =
        brezis_browder_check(ri.relation, 1e-8, {200, static_cast<std::uint64_t>(total)});
    if (!r.passed()) ++violations;
    if ((*r.value("maximal") != 0.0) != ri.maximal) ++wrong;
    ++total;
  }
  return {violations == 0 && wrong == 0,
          fmt("%d relations (d <= 5): %d non-constant truth tables, %d label mismatches", total,
              violations, wrong)};
}

Outcome pdense() {
  inst::Rng rng(707);
  double worst = -INFINITY;
  int cases = 0;
  for (Eigen::Index d = 1; d <= 6; ++d) {
    const SnlSpace space = make_product_space(d);
    for (int k = 0; k < 100; ++k) {
      const DenseWitness w = pdense_witness(space, inst::gaussian(2 * d, rng) * 5.0);
      worst = std::max(worst, w.value);
      ++cases;
    }
  }
  return {worst <= 1e-10, fmt("max value = %.3e over %d d* (bound 1e-10)", worst, cases)};
}

Outcome helix() {
  fixtures::HelixOptions unit;
  unit.samples = 1000000;
  unit.seed = 808;
  const CheckReport a = fixtures::helix_scan(unit);
  const double min_unit = *a.value("min_pair_q");

  fixtures::HelixOptions scaled;
  scaled.lambda = 0.9;
  scaled.tol = 1e-6;
  const CheckReport b = fixtures::helix_search(scaled);
  bool certified = false;
  double revalidated = NAN;
  if (const Vector* p = b.witness("b")) {
    const Vector& c = *b.witness("c");
    revalidated = q(fixtures::space("swap3", 0), *p - c);
    certified = revalidated < -1e-6 &&
                (*p - fixtures::helix_point((*b.witness("theta"))(0), 0.9)).norm() < 1e-12;
  }
  return {min_unit >= -1e-12 && certified,
          fmt("unit helix min pair q = %.3e over 1e6 pairs (>= -1e-12); lambda=0.9 witness q = "
              "%.4e (< -1e-6), re-validated=%s",
              min_unit, revalidated, certified ? "yes" : "no")};
}

Outcome structural_identities() {
  inst::Rng rng(909);
  double eq6 = 0.0, iso = 0.0, eq7 = 0.0;
  int spaces = 0;
  for (int i = 0; i < 40; ++i) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(rng() % 12);
    const SnlSpace space =
        i % 4 == 0 ? make_product_space(1 + n / 2)
                   : make_snl_space(inst::random_involution(n, static_cast<Eigen::Index>(rng() % (n + 1)), rng));
    const CheckReport r = validate_dual(space, 1000, 9000 + i);
    eq6 = std::max(eq6, *r.value("sum_identity_max_residual"));
    iso = std::max(iso, *r.value("isometry_max_residual"));
    for (int k = 0; k < 1000; ++k) {
      const Vector b = inst::gaussian(space.dim(), rng);
      const double lhs = q_dual(space, space.L() * b), rhs = q(space, b);
      eq7 = std::max(eq7, std::abs(lhs - rhs) / std::max(b.squaredNorm(), 1e-300));
    }
    ++spaces;
  }
  return {eq6 <= 1e-10 && iso <= 1e-10 && eq7 <= 1e-12,
          fmt("%d spaces x 1000 samples: sum identity %.2e, isometry %.2e (<= 1e-10); "
              "q~(Lb) vs q(b) rel %.2e (<= 1e-12)",
              spaces, eq6, iso, eq7)};
}

Outcome br_contract() {
  inst::Rng rng(1010);
  std::uniform_real_distribution<> unit(0.0, 1.0);
  double worst_res = 0.0, worst_ratio = 0.0;
  int cases = 0;
  while (cases < 100) {
    const auto pi = inst::random_positive_instance(rng, 8, cases % 2 == 0);
    const Eigen::Index n = pi.space.dim();
    const auto f = make_function(pi.space, pi.a, inst::gaussian(n, rng), FunctionKind::P);
    Vector b0 = f.anchor();
    if (!pi.a.is_zero()) b0 += pi.a.basis() * inst::gaussian(pi.a.rank(), rng);
    const Vector b0s = inst::gaussian(n, rng);
    const double gap = fenchel_residual(f, b0, b0s).to_double();
    const double eta = std::sqrt(std::max(gap, 0.0)) * (1.01 + unit(rng));
    const RefinedPair rp = br_refine(f, b0, b0s, eta);
    const SubgradientSet sub = subdiff_p(f, rp.b1);
    if (sub.empty || !sub.contains(rp.b1star, 1e-9)) return {false, "b1* not in subdifferential"};
    worst_res = std::max(worst_res, std::abs(rp.subgradient_residual));
    worst_ratio = std::max(worst_ratio, (rp.b1 - b0).norm() / (std::sqrt(2.0) * eta));
    if ((rp.b1star - b0s).norm() != 0.0) return {false, "b1* moved"};
    ++cases;
  }
  return {worst_res <= 1e-9 && worst_ratio <= 1.0,
          fmt("%d inputs: max subgradient residual %.2e (<= 1e-9), max |b1-b0|/(sqrt2 eta) = %.3f "
              "(<= 1)",
              cases, worst_res, worst_ratio)};
}

Outcome negative_controls() {
  std::vector<std::string> problems;
  try {
    make_snl_space(fixtures::matrix("cyclic3", 0));
    problems.push_back("cyclic3 accepted");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSymmetric) problems.push_back("cyclic3 wrong error");
  }
  const SnlSpace zero = make_snl_space(Matrix::Zero(1, 1));
  if (zero.has_dual()) problems.push_back("(R,0) reports a dual");
  try {
    q_dual(zero, Vector::Ones(1));
    problems.push_back("q_dual without dual");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoDual) problems.push_back("q_dual wrong error");
  }

  const auto path = std::filesystem::temp_directory_path() / "snlkit_acceptance_r0.json";
  std::ofstream(path) << R"({"space": {"L": [[0]]}, "subspace": [[1]]})";
  int clean = 0;
  const std::vector<std::string> dual_commands = {"check-maximal", "check-maximal-negative",
                                                  "validate-dual"};
  for (const auto& c : dual_commands) {
    std::ostringstream out, err;
    const int rc = cli::run(c, path.string(), {}, out, err);
    if (rc == cli::kExitError && out.str().empty() && err.str().find("NoDual") != std::string::npos) {
      ++clean;
    } else {
      problems.push_back(c + " rc=" + std::to_string(rc));
    }
  }
  std::ostringstream out, err;
  std::ofstream(path) << R"({"space": {"fixture": "cyclic3"}, "subspace": [[1, 0, 0]]})";
  if (cli::run("check-positive", path.string(), {}, out, err) != cli::kExitError ||
      err.str().find("NotSymmetric") == std::string::npos) {
    problems.push_back("cyclic3 instance not rejected by CLI");
  }
  std::filesystem::remove(path);
  std::string detail = fmt("cyclic3 -> NotSymmetric; (R,0) has_dual=false; %d/%zu dual commands "
                           "exit 2 with NoDual",
                           clean, dual_commands.size());
  for (const auto& p : problems) detail += "; problem: " + p;
  return {problems.empty(), detail};
}

}  // namespace

int main() {
  report(1, "maximality criterion vs ground truth and oracle", maximality_equivalence);
  report(2, "min of p^C vanishes for maximal A", inf_pc_vanishes);
  report(3, "subdifferential of q^C is exactly Lb + A0", subdifferential_exact);
  report(4, "conjugate lower bound", conjugate_bound);
  report(5, "type (NI) condition pattern", ni_pattern);
  report(6, "Brezis-Browder four-way equivalence", brezis_browder);
  report(7, "product-space density witness", pdense);
  report(8, "helix fixtures", helix);
  report(9, "dual structural identities", structural_identities);
  report(10, "Brondsted-Rockafellar refinement contract", br_contract);
  report(11, "negative-space controls", negative_controls);
  std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
