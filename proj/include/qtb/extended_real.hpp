#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>

namespace qtb {

/// A real number or +infinity. Never NaN, never -infinity.
///
/// Infinite values appear as coder outputs (kappa(0) for q <= 1) and as
/// complexity/divergence results. The 0 * inf = 0 term convention is not an
/// arithmetic rule of this type; the places in `quantities` that rely on it
/// spell it out explicitly.
class ExtendedReal {
 public:
  ExtendedReal() = default;

  ExtendedReal(double v) : v_(v) {
    if (std::isnan(v_)) {
      throw std::domain_error("ExtendedReal: NaN is not a value");
    }
    if (std::isinf(v_) && v_ < 0.0) {
      throw std::domain_error("ExtendedReal: -infinity is not a value");
    }
  }

  static ExtendedReal infinity() {
    return ExtendedReal(std::numeric_limits<double>::infinity());
  }

  bool is_finite() const { return std::isfinite(v_); }
  bool is_infinite() const { return std::isinf(v_); }

  /// Raw value; +inf when infinite.
  double value() const { return v_; }

  friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.v_ == b.v_; }
  friend std::partial_ordering operator<=>(ExtendedReal a, ExtendedReal b) {
    return a.v_ <=> b.v_;
  }

 private:
  double v_ = 0.0;
};

}  // namespace qtb
