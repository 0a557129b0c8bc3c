#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snlkit/types.hpp"

namespace snlkit {

enum class Status { Pass, Fail, Inconclusive };

std::string_view to_string(Status s);

/// Verdict of a check together with the numbers that justify it.
///
/// A Fail always carries at least one witness that can be fed back into the
/// library to reproduce the failure (for instance a vector w of the subspace
/// with q(w) < -tol).
struct CheckReport {
  Status status = Status::Inconclusive;
  std::string criterion;
  double tolerance = 0.0;

  struct Scalar {
    std::string name;
    double value;
  };
  struct Series {
    std::string name;
    Vector values;
  };

  std::vector<Scalar> evidence;
  std::vector<Series> series;     // eigenvalue lists and the like
  std::vector<Series> witnesses;  // vectors; a pair is stored as two entries
  std::vector<std::string> notes;

  bool passed() const { return status == Status::Pass; }

  CheckReport& add(std::string name, double value) {
    evidence.push_back({std::move(name), value});
    return *this;
  }
  CheckReport& add_series(std::string name, Vector values) {
    series.push_back({std::move(name), std::move(values)});
    return *this;
  }
  CheckReport& add_witness(std::string name, Vector w) {
    witnesses.push_back({std::move(name), std::move(w)});
    return *this;
  }

  std::optional<double> value(std::string_view name) const;
  const Vector* witness(std::string_view name) const;
  const Vector* first_witness() const {
    return witnesses.empty() ? nullptr : &witnesses.front().values;
  }
};

}  // namespace snlkit
