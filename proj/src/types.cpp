#include "snlkit/types.hpp"

#include <sstream>

namespace snlkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NormExceedsOne: return "NormExceedsOne";
    case ErrorCode::NoDual: return "NoDual";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotNegative: return "NotNegative";
    case ErrorCode::NotQ: return "NotQ";
    case ErrorCode::NotP: return "NotP";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::NotProductSpace: return "NotProductSpace";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::CommandError: return "CommandError";
  }
  return "Unknown";
}

double ExtReal::value() const {
  if (kind_ != Kind::Finite) {
    throw std::logic_error("ExtReal::value() on an infinite value");
  }
  return value_;
}

ExtReal ExtReal::operator-() const {
  switch (kind_) {
    case Kind::PosInf: return neg_inf();
    case Kind::NegInf: return pos_inf();
    default: return finite(-value_);
  }
}

std::string ExtReal::str() const {
  switch (kind_) {
    case Kind::PosInf: return "+inf";
    case Kind::NegInf: return "-inf";
    default: {
      std::ostringstream os;
      os.precision(17);
      os << value_;
      return os.str();
    }
  }
}

ExtReal operator+(const ExtReal& a, const ExtReal& b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
    throw std::domain_error("undefined sum of +inf and -inf");
  }
  if (a.is_pos_inf() || b.is_pos_inf()) return ExtReal::pos_inf();
  if (a.is_neg_inf() || b.is_neg_inf()) return ExtReal::neg_inf();
  return ExtReal::finite(a.value() + b.value());
}

ExtReal operator-(const ExtReal& a, const ExtReal& b) { return a + (-b); }

}  // namespace snlkit
