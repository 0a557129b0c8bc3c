#include "snlkit/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "snlkit/fixtures.hpp"

namespace snlkit::io {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

Json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return v;
}

std::vector<Vector> rows_from_json(const Json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r, what));
  return rows;
}

template <typename T>
std::optional<T> opt(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    parse_error(std::string("bad value for '") + key + "': " + e.what());
  }
}

std::optional<Vector> opt_vector(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return vector_from_json(j.at(key), key);
}

}  // namespace

Vector vector_from_json(const Json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) parse_error(std::string(what) + " contains a non-number");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

Matrix matrix_from_json(const Json& j, const char* what) {
  const auto rows = rows_from_json(j, what);
  if (rows.empty()) parse_error(std::string(what) + " is empty");
  const auto cols = rows.front().size();
  Matrix m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) parse_error(std::string(what) + " has ragged rows");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(number(v[i]));
  return a;
}

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(to_json(Vector(m.row(i).transpose())));
  return a;
}

Json rows_json(const Subspace& s) {
  Json a = Json::array();
  for (Eigen::Index j = 0; j < s.rank(); ++j) a.push_back(to_json(Vector(s.basis().col(j))));
  return a;
}

Json to_json(const ExtReal& x) {
  if (x.is_pos_inf()) return "+inf";
  if (x.is_neg_inf()) return "-inf";
  return x.value();
}

Json to_json(const CheckReport& r) {
  Json j;
  j["status"] = std::string(to_string(r.status));
  j["criterion"] = r.criterion;
  j["tolerance"] = number(r.tolerance);
  Json ev = Json::object();
  for (const auto& e : r.evidence) ev[e.name] = number(e.value);
  for (const auto& s : r.series) ev[s.name] = to_json(s.values);
  j["evidence"] = ev;
  Json w = Json::object();
  for (const auto& x : r.witnesses) w[x.name] = to_json(x.values);
  j["witnesses"] = w;
  j["notes"] = r.notes;
  return j;
}

Eigen::Index Instance::dimension() const {
  if (space) {
    if (space->L) return space->L->rows();
    if (space->product) return 2 * *space->product;
    if (space->fixture) return fixtures::matrix(*space->fixture, space->fixture_size).rows();
  }
  if (relation) {
    if (relation->matrix) return 2 * relation->matrix->rows();
    return 2 * relation->edim;
  }
  return 0;
}

Instance parse_instance(const Json& j) {
  if (!j.is_object()) parse_error("instance must be a JSON object");
  Instance inst;

  if (j.contains("space")) {
    const Json& s = j.at("space");
    if (!s.is_object()) parse_error("'space' must be an object");
    Instance::SpaceSpec spec;
    int forms = 0;
    if (s.contains("L")) {
      spec.L = matrix_from_json(s.at("L"), "space.L");
      ++forms;
    }
    if (s.contains("product")) {
      spec.product = opt<Eigen::Index>(s, "product");
      ++forms;
    }
    if (s.contains("fixture")) {
      spec.fixture = opt<std::string>(s, "fixture");
      spec.fixture_size = opt<Eigen::Index>(s, "size").value_or(0);
      ++forms;
    }
    if (forms != 1) {
      throw Error(ErrorCode::ValidationError,
                  "space must have exactly one of 'L', 'product', 'fixture'");
    }
    spec.tol = opt<double>(s, "tol").value_or(kDefaultTol);
    if (spec.product && *spec.product < 1) {
      throw Error(ErrorCode::ValidationError, "product dimension must be >= 1");
    }
    inst.space = spec;
  }

  if (j.contains("subspace")) inst.subspace = rows_from_json(j.at("subspace"), "subspace");
  inst.shift = opt_vector(j, "shift");
  inst.b = opt_vector(j, "b");
  inst.bstar = opt_vector(j, "bstar");
  inst.dstar = opt_vector(j, "dstar");
  inst.b0 = opt_vector(j, "b0");
  inst.b0star = opt_vector(j, "b0star");
  inst.kind = opt<std::string>(j, "kind");
  if (inst.kind && *inst.kind != "Q" && *inst.kind != "P") parse_error("kind must be \"Q\" or \"P\"");

  if (j.contains("relation")) {
    const Json& r = j.at("relation");
    if (!r.is_object()) parse_error("'relation' must be an object");
    Instance::RelationSpec spec;
    if (r.contains("matrix")) {
      spec.matrix = matrix_from_json(r.at("matrix"), "relation.matrix");
      if (spec.matrix->rows() != spec.matrix->cols()) {
        throw Error(ErrorCode::ValidationError, "relation.matrix must be square");
      }
      spec.edim = spec.matrix->rows();
    } else {
      spec.edim = opt<Eigen::Index>(r, "edim").value_or(0);
      if (spec.edim < 1) throw Error(ErrorCode::ValidationError, "relation.edim must be >= 1");
      if (r.contains("graph")) spec.graph = rows_from_json(r.at("graph"), "relation.graph");
    }
    inst.relation = spec;
  }

  if (j.contains("params")) {
    const Json& p = j.at("params");
    if (!p.is_object()) parse_error("'params' must be an object");
    inst.params.trials = opt<int>(p, "trials");
    inst.params.seed = opt<std::uint64_t>(p, "seed");
    inst.params.tol = opt<double>(p, "tol");
    inst.params.samples = opt<int>(p, "samples");
    inst.params.eta = opt<double>(p, "eta");
  }

  if (!inst.space && !inst.relation) {
    throw Error(ErrorCode::ValidationError, "instance needs a 'space' or a 'relation'");
  }
  const auto n = inst.dimension();
  if (inst.space && inst.relation && n != 2 * inst.relation->edim) {
    throw Error(ErrorCode::ValidationError, "relation does not fit the space dimension");
  }
  auto check = [&](const std::optional<Vector>& v, const char* what) {
    if (v && v->size() != n) {
      throw Error(ErrorCode::ValidationError,
                  std::string(what) + " has length " + std::to_string(v->size()) +
                      ", space dimension is " + std::to_string(n));
    }
  };
  check(inst.shift, "shift");
  check(inst.b, "b");
  check(inst.bstar, "bstar");
  check(inst.dstar, "dstar");
  check(inst.b0, "b0");
  check(inst.b0star, "b0star");
  if (inst.subspace) {
    for (const auto& v : *inst.subspace) check(v, "subspace row");
  }
  if (inst.relation) {
    for (const auto& v : inst.relation->graph) check(v, "relation.graph row");
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return parse_instance(j);
}

Json instance_to_json(const Instance& inst) {
  Json j;
  if (inst.space) {
    Json s;
    if (inst.space->L) s["L"] = to_json(*inst.space->L);
    if (inst.space->product) s["product"] = *inst.space->product;
    if (inst.space->fixture) {
      s["fixture"] = *inst.space->fixture;
      if (inst.space->fixture_size > 0) s["size"] = inst.space->fixture_size;
    }
    s["tol"] = inst.space->tol;
    j["space"] = s;
  }
  if (inst.subspace) {
    Json rows = Json::array();
    for (const auto& v : *inst.subspace) rows.push_back(to_json(v));
    j["subspace"] = rows;
  }
  const std::pair<const char*, const std::optional<Vector>*> vecs[] = {
      {"shift", &inst.shift}, {"b", &inst.b},   {"bstar", &inst.bstar},
      {"dstar", &inst.dstar}, {"b0", &inst.b0}, {"b0star", &inst.b0star}};
  for (const auto& [k, v] : vecs) {
    if (*v) j[k] = to_json(**v);
  }
  if (inst.relation) {
    Json r;
    if (inst.relation->matrix) {
      r["matrix"] = to_json(*inst.relation->matrix);
    } else {
      r["edim"] = inst.relation->edim;
      Json rows = Json::array();
      for (const auto& v : inst.relation->graph) rows.push_back(to_json(v));
      r["graph"] = rows;
    }
    j["relation"] = r;
  }
  if (inst.kind) j["kind"] = *inst.kind;
  Json p = Json::object();
  if (inst.params.trials) p["trials"] = *inst.params.trials;
  if (inst.params.seed) p["seed"] = *inst.params.seed;
  if (inst.params.tol) p["tol"] = *inst.params.tol;
  if (inst.params.samples) p["samples"] = *inst.params.samples;
  if (inst.params.eta) p["eta"] = *inst.params.eta;
  if (!p.empty()) j["params"] = p;
  return j;
}

SnlSpace build_space(const Instance& inst) {
  if (!inst.space) {
    if (inst.relation) return make_product_space(inst.relation->edim);
    throw Error(ErrorCode::ValidationError, "instance has no space");
  }
  const auto& s = *inst.space;
  if (s.product) return make_product_space(*s.product);
  try {
    if (s.fixture) {
      if (*s.fixture == "product") return make_product_space(std::max<Eigen::Index>(1, s.fixture_size));
      return make_snl_space(fixtures::matrix(*s.fixture, s.fixture_size), s.tol);
    }
    return make_snl_space(*s.L, s.tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotSymmetric || e.code() == ErrorCode::NormExceedsOne ||
        e.code() == ErrorCode::DimensionMismatch) {
      throw Error(ErrorCode::ValidationError, e.what());
    }
    throw;
  }
}

Subspace build_subspace(const Instance& inst) {
  const auto n = inst.dimension();
  if (!inst.subspace) return Subspace(n);
  return span_in(n, *inst.subspace);
}

LinearRelation build_relation(const Instance& inst) {
  if (inst.relation) {
    if (inst.relation->matrix) return relation_from_matrix(*inst.relation->matrix);
    const auto d = inst.relation->edim;
    return LinearRelation(d, span_in(2 * d, inst.relation->graph));
  }
  const SnlSpace space = build_space(inst);
  const auto d = space.product_edim();
  if (!d) throw Error(ErrorCode::ValidationError, "relation commands need a product space");
  return LinearRelation(*d, build_subspace(inst));
}

Report Report::from_check(std::string command, const CheckReport& r, std::uint64_t seed) {
  Report out;
  out.command = std::move(command);
  out.status = r.status;
  out.criterion = r.criterion;
  out.tolerance = r.tolerance;
  out.seed = seed;
  const Json j = io::to_json(r);
  out.evidence = j.at("evidence");
  out.witnesses = j.at("witnesses");
  out.notes = r.notes;
  return out;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["status"] = std::string(snlkit::to_string(status));
  j["criterion"] = criterion;
  j["evidence"] = evidence;
  j["witnesses"] = witnesses;
  j["result"] = result;
  j["notes"] = notes;
  j["tolerance"] = number(tolerance);
  j["version"] = kVersion;
  j["seed"] = seed;
  return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

}  // namespace snlkit::io
