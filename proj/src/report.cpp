#include "snlkit/report.hpp"

namespace snlkit {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::optional<double> CheckReport::value(std::string_view name) const {
  for (const auto& e : evidence) {
    if (e.name == name) return e.value;
  }
  return std::nullopt;
}

const Vector* CheckReport::witness(std::string_view name) const {
  for (const auto& w : witnesses) {
    if (w.name == name) return &w.values;
  }
  return nullptr;
}

}  // namespace snlkit
