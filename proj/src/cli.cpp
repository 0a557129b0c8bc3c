#include "snlkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "snlkit/convex.hpp"
#include "snlkit/fixtures.hpp"
#include "snlkit/positivity.hpp"
#include "snlkit/relations.hpp"

namespace snlkit::cli {

using io::Instance;
using io::Json;
using io::Report;

const std::vector<std::string>& commands() {
  static const std::vector<std::string> all = {
      "check-positive", "check-negative", "check-maximal", "check-maximal-negative",
      "polar",          "adjoint",        "conjugate",     "subdiff",
      "inf-pc",         "br-refine",      "ni-check",      "bb-check",
      "validate-dual",  "oracle",         "fixtures"};
  return all;
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return kExitPass;
    case Status::Fail: return kExitFail;
    case Status::Inconclusive: return kExitInconclusive;
  }
  return kExitError;
}

namespace {

struct Resolved {
  double tol;
  std::uint64_t seed;
  int trials;
  std::optional<long> samples;
  std::optional<double> eta;
};

Resolved resolve(const Instance& inst, const Options& o) {
  Resolved r;
  r.tol = o.tol.value_or(inst.params.tol.value_or(kDefaultCheckTol));
  r.seed = o.seed.value_or(inst.params.seed.value_or(0));
  r.trials = o.trials.value_or(inst.params.trials.value_or(10000));
  if (o.samples) {
    r.samples = o.samples;
  } else if (inst.params.samples) {
    r.samples = *inst.params.samples;
  }
  r.eta = o.eta ? o.eta : inst.params.eta;
  return r;
}

const Vector& need(const std::optional<Vector>& v, const char* name, const std::string& command) {
  if (!v) throw Error(ErrorCode::CommandError, command + " needs '" + name + "' in the instance");
  return *v;
}

Report informational(std::string command, std::string criterion, std::uint64_t seed,
                     double tol) {
  Report r;
  r.command = std::move(command);
  r.status = Status::Pass;
  r.criterion = std::move(criterion);
  r.seed = seed;
  r.tolerance = tol;
  return r;
}

QuadraticOnAffine function_of(const Instance& inst, FunctionKind kind, double tol) {
  const SnlSpace space = io::build_space(inst);
  const Vector d = inst.shift.value_or(Vector::Zero(space.dim()));
  return make_function(space, io::build_subspace(inst), d, kind, tol);
}

Json subgradient_json(const SubgradientSet& s) {
  Json j;
  j["empty"] = s.empty;
  if (!s.empty) {
    j["anchor"] = io::to_json(s.anchor);
    j["directions"] = io::rows_json(s.directions);
  }
  return j;
}

}  // namespace

Report execute(const std::string& command, const Instance& inst, const Options& opts) {
  const Resolved p = resolve(inst, opts);

  if (command == "check-positive" || command == "check-negative" ||
      command == "check-maximal" || command == "check-maximal-negative") {
    const SnlSpace space = io::build_space(inst);
    const Subspace a = io::build_subspace(inst);
    CheckReport r;
    if (command == "check-positive") r = is_positive(space, a, p.tol);
    if (command == "check-negative") r = is_negative(space, a, p.tol);
    if (command == "check-maximal") r = is_maximally_positive(space, a, p.tol);
    if (command == "check-maximal-negative") r = is_maximally_negative(space, a, p.tol);
    Report out = Report::from_check(command, r, p.seed);
    out.result["rank"] = a.rank();
    return out;
  }

  if (command == "polar") {
    const SnlSpace space = io::build_space(inst);
    const Subspace pol = polar(io::build_subspace(inst));
    Report out = informational(command, "orthogonal-complement", p.seed, pol.rank_tol());
    out.result["rank"] = pol.rank();
    out.result["basis"] = io::rows_json(pol);
    return out;
  }

  if (command == "adjoint") {
    const LinearRelation rel = io::build_relation(inst);
    const LinearRelation adj = adjoint(rel);
    const auto d = rel.edim;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < rel.graph.rank(); ++i) {
      const Vector a = rel.graph.basis().col(i);
      for (Eigen::Index j = 0; j < adj.graph.rank(); ++j) {
        const Vector y = adj.graph.basis().col(j);
        worst = std::max(worst, std::abs(a.head(d).dot(y.head(d)) - a.tail(d).dot(y.tail(d))));
      }
    }
    Report out = informational(command, "rho-of-polar", p.seed, rel.graph.rank_tol());
    out.evidence["bilinear_max_residual"] = worst;
    out.result["edim"] = d;
    out.result["graph"] = io::rows_json(adj.graph);
    return out;
  }

  if (command == "conjugate") {
    const auto f = function_of(inst, FunctionKind::Q, p.tol);
    const ExtReal v = conjugate(f, need(inst.bstar, "bstar", command));
    Report out = informational(command, "closed-form-conjugate", p.seed, p.tol);
    out.result["value"] = io::to_json(v);
    return out;
  }

  if (command == "subdiff") {
    const bool is_p = inst.kind.value_or("Q") == "P";
    const auto f = function_of(inst, is_p ? FunctionKind::P : FunctionKind::Q, p.tol);
    const Vector& b = need(inst.b, "b", command);
    const SubgradientSet s = is_p ? subdiff_p(f, b) : subdiff_q(f, b);
    Report out = informational(command, is_p ? "subdifferential-p" : "subdifferential-q",
                               p.seed, p.tol);
    out.result["kind"] = is_p ? "P" : "Q";
    out.result["subgradients"] = subgradient_json(s);
    if (!s.empty) {
      const ExtReal res = fenchel_residual(f, b, s.anchor);
      out.evidence["anchor_fenchel_residual"] = io::to_json(res);
    }
    return out;
  }

  if (command == "inf-pc") {
    const auto f = function_of(inst, FunctionKind::P, p.tol);
    const Minimum m = inf_pC(f);
    Report out = informational(command, "strongly-convex-minimum", p.seed, p.tol);
    out.result["value"] = m.value;
    out.result["argmin"] = io::to_json(m.argmin);
    return out;
  }

  if (command == "br-refine") {
    const auto f = function_of(inst, FunctionKind::P, p.tol);
    if (!p.eta) throw Error(ErrorCode::CommandError, "br-refine needs eta (params.eta or --eta)");
    const RefinedPair rp =
        br_refine(f, need(inst.b0, "b0", command), need(inst.b0star, "b0star", command), *p.eta);
    Report out = Report::from_check(command, rp.report, p.seed);
    out.result["b1"] = io::to_json(rp.b1);
    out.result["b1star"] = io::to_json(rp.b1star);
    return out;
  }

  if (command == "ni-check" || command == "bb-check") {
    const LinearRelation rel = io::build_relation(inst);
    NiSweepOptions sweep;
    sweep.seed = p.seed;
    if (p.samples) sweep.samples = static_cast<int>(*p.samples);
    const CheckReport r = command == "ni-check" ? is_type_ni(rel, p.tol, sweep)
                                                : brezis_browder_check(rel, p.tol, sweep);
    Report out = Report::from_check(command, r, p.seed);
    if (command == "bb-check") {
      Json table;
      for (const char* k : {"maximal", "adjoint_monotone", "adjoint_maximal", "type_ni"}) {
        table[k] = *r.value(k) != 0.0;
      }
      out.result["truth_table"] = table;
    }
    return out;
  }

  if (command == "validate-dual") {
    const SnlSpace space = io::build_space(inst);
    const int samples = static_cast<int>(p.samples.value_or(1000));
    return Report::from_check(command, validate_dual(space, samples, p.seed), p.seed);
  }

  if (command == "oracle") {
    const SnlSpace space = io::build_space(inst);
    const Subspace a = io::build_subspace(inst);
    const auto w = extension_oracle(space, a, p.trials, p.seed, p.tol);
    Report out;
    out.command = command;
    out.criterion = "extension-oracle";
    out.tolerance = p.tol;
    out.seed = p.seed;
    out.evidence["trials"] = p.trials;
    if (w) {
      out.status = Status::Fail;
      out.witnesses["extension"] = io::to_json(*w);
      out.evidence["extension_inf_q"] = io::to_json(inf_q_over(space, a, *w, p.tol));
      out.notes.push_back("A together with the witness is L-positive, so A is not maximal");
    } else {
      out.status = Status::Inconclusive;
      out.notes.push_back("no extension found; this is evidence, not proof, of maximality");
    }
    return out;
  }

  throw Error(ErrorCode::CommandError, "unknown command '" + command + "'");
}

Report run_fixture(const std::string& name, const Options& opts) {
  const std::uint64_t seed = opts.seed.value_or(0);
  if (name == "helix" || name == "scaled-helix") {
    fixtures::HelixOptions h;
    h.lambda = opts.lambda.value_or(name == "helix" ? 1.0 : 0.9);
    h.samples = opts.samples.value_or(1000000);
    h.seed = seed;
    h.theta_max = opts.theta_max.value_or(20.0);
    h.tol = opts.tol.value_or(name == "helix" ? 1e-12 : 1e-6);
    const CheckReport r = name == "helix" ? fixtures::helix_scan(h) : fixtures::helix_search(h);
    Report out = Report::from_check("fixtures", r, seed);
    out.result["fixture"] = name;
    return out;
  }

  const Matrix l = fixtures::matrix(name, opts.size.value_or(0));
  Instance inst;
  Instance::SpaceSpec spec;
  if (name == "product") {
    spec.product = opts.size.value_or(1);
  } else {
    spec.L = l;
  }
  inst.space = spec;
  if (name == "line-1m12") inst.subspace = std::vector<Vector>{(Vector(3) << 1, -1, 2).finished()};
  Report out;
  out.command = "fixtures";
  out.status = Status::Pass;
  out.criterion = "fixture";
  out.seed = seed;
  out.result["fixture"] = name;
  out.result["instance"] = io::instance_to_json(inst);
  try {
    io::build_space(inst);
    out.result["validation"] = "ok";
  } catch (const Error& e) {
    out.result["validation"] = e.what();
  }
  return out;
}

int run(const std::string& command, const std::string& target, const Options& opts,
        std::ostream& out, std::ostream& err) {
  try {
    Report rep;
    if (command == "fixtures") {
      rep = run_fixture(target, opts);
    } else {
      if (std::find(commands().begin(), commands().end(), command) == commands().end()) {
        throw Error(ErrorCode::CommandError, "unknown command '" + command + "'");
      }
      rep = execute(command, io::load_instance(target), opts);
    }
    const std::string text = rep.dump();
    out << text;
    if (opts.json_out) {
      std::ofstream f(*opts.json_out, std::ios::binary);
      if (!f) throw Error(ErrorCode::CommandError, "cannot write '" + *opts.json_out + "'");
      f << text;
    }
    return exit_code(rep.status);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace snlkit::cli
