#pragma once

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace snlkit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Failure categories raised by the toolkit. Every thrown snlkit::Error
/// carries exactly one of these.
enum class ErrorCode {
  DimensionMismatch,
  NotSymmetric,
  NormExceedsOne,
  NoDual,
  NotPositive,
  NotNegative,
  NotQ,
  NotP,
  PreconditionViolated,
  NotMonotone,
  OddDimension,
  NotProductSpace,
  UnknownFixture,
  ParseError,
  ValidationError,
  CommandError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A value in [-inf, +inf] with the infinities kept out of the floating
/// point payload. Linear solves only ever see the finite value.
class ExtReal {
 public:
  enum class Kind { Finite, PosInf, NegInf };

  static ExtReal finite(double v) { return ExtReal(Kind::Finite, v); }
  static ExtReal pos_inf() { return ExtReal(Kind::PosInf, 0.0); }
  static ExtReal neg_inf() { return ExtReal(Kind::NegInf, 0.0); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }

  /// Finite payload. Throws if the value is infinite.
  double value() const;

  /// Lossy conversion for reporting only.
  double to_double() const noexcept {
    switch (kind_) {
      case Kind::PosInf: return std::numeric_limits<double>::infinity();
      case Kind::NegInf: return -std::numeric_limits<double>::infinity();
      default: return value_;
    }
  }

  ExtReal operator-() const;

  friend std::partial_ordering operator<=>(const ExtReal& a, double b) {
    switch (a.kind_) {
      case Kind::PosInf: return std::partial_ordering::greater;
      case Kind::NegInf: return std::partial_ordering::less;
      default: return a.value_ <=> b;
    }
  }
  friend bool operator==(const ExtReal& a, double b) { return a.is_finite() && a.value_ == b; }

  std::string str() const;

 private:
  ExtReal(Kind k, double v) : kind_(k), value_(v) {}
  Kind kind_;
  double value_;
};

/// finite + finite, or the infinity that dominates. (+inf) + (-inf) is rejected.
ExtReal operator+(const ExtReal& a, const ExtReal& b);
ExtReal operator-(const ExtReal& a, const ExtReal& b);

inline void require_dim(Eigen::Index got, Eigen::Index want, std::string_view what) {
  if (got != want) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(got) + ", expected " +
                    std::to_string(want));
  }
}

}  // namespace snlkit
