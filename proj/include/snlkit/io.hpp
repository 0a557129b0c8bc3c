#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "snlkit/relations.hpp"
#include "snlkit/report.hpp"
#include "snlkit/snl_space.hpp"
#include "snlkit/subspace.hpp"

namespace snlkit::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "snlkit 1.0.0";

/// Instance file contents. Vectors and basis rows are plain JSON arrays;
/// matrices are arrays of rows.
///
///   {
///     "space":    {"L": [[...]], "tol": 1e-9} | {"product": d} | {"fixture": name, "size": n},
///     "subspace": [[...], ...],                  basis rows
///     "shift":    [...],                         d in C = A - d
///     "b": [...], "bstar": [...], "dstar": [...], "b0": [...], "b0star": [...],
///     "relation": {"matrix": [[...]]} | {"edim": d, "graph": [[...], ...]},
///     "kind":     "Q" | "P",
///     "params":   {"trials": N, "seed": N, "tol": x, "samples": N, "eta": x}
///   }
struct Instance {
  struct SpaceSpec {
    std::optional<Matrix> L;
    double tol = kDefaultTol;
    std::optional<Eigen::Index> product;
    std::optional<std::string> fixture;
    Eigen::Index fixture_size = 0;
  };
  struct RelationSpec {
    std::optional<Matrix> matrix;
    Eigen::Index edim = 0;
    std::vector<Vector> graph;
  };
  struct Params {
    std::optional<int> trials;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::optional<int> samples;
    std::optional<double> eta;
  };

  std::optional<SpaceSpec> space;
  std::optional<std::vector<Vector>> subspace;
  std::optional<Vector> shift, b, bstar, dstar, b0, b0star;
  std::optional<RelationSpec> relation;
  std::optional<std::string> kind;
  Params params;

  /// Ambient dimension implied by the space or relation spec.
  Eigen::Index dimension() const;
};

/// Throws ParseError on malformed JSON or wrong shapes, ValidationError when an
/// instance invariant (one space form, consistent lengths) fails.
Instance parse_instance(const Json& j);
Instance load_instance(const std::string& path);
Json instance_to_json(const Instance& inst);

/// Validated space; SNL failures are rethrown as ValidationError naming the
/// violated invariant.
SnlSpace build_space(const Instance& inst);
Subspace build_subspace(const Instance& inst);
LinearRelation build_relation(const Instance& inst);

Json to_json(const Vector& v);
Json to_json(const Matrix& m);  // rows
Json rows_json(const Subspace& s);  // basis vectors as rows
Json to_json(const ExtReal& x);     // number, or "+inf" / "-inf"
Json to_json(const CheckReport& r);

Vector vector_from_json(const Json& j, const char* what);
Matrix matrix_from_json(const Json& j, const char* what);

/// Report file: command, status, criterion, evidence, witnesses, result,
/// tolerance, version, seed. Key order is fixed.
struct Report {
  std::string command;
  Status status = Status::Inconclusive;
  std::string criterion;
  Json evidence = Json::object();
  Json witnesses = Json::object();
  Json result = Json::object();
  std::vector<std::string> notes;
  double tolerance = 0.0;
  std::uint64_t seed = 0;

  static Report from_check(std::string command, const CheckReport& r, std::uint64_t seed);
  Json to_json() const;
  std::string dump() const;
};

}  // namespace snlkit::io
