#pragma once

#include "qtb/extended_real.hpp"

namespace qtb {

/// Width of the window around q = 1 inside which the q = 1 closed forms are
/// used. The generic (x^(1-q) - 1)/(1-q) form cancels catastrophically there.
inline constexpr double kBranchWindow = 1e-9;

/// Upper cap on q at construction, keeping powers representable.
inline constexpr double kMaxQ = 1e6;

/// Validated interaction parameter: q finite, 0 <= q <= kMaxQ.
class QParam {
 public:
  explicit QParam(double q);
  double value() const { return q_; }

  /// True when q falls in the q = 1 branch window.
  bool is_classical() const;

 private:
  double q_;
};

/// ln_q x: ln x at q = 1, else (x^(1-q) - 1)/(1-q). Requires x > 0 finite.
double q_log(QParam q, double x);

/// Inverse of q_log. Requires u >= -1/(1-q) for q < 1 and u < 1/(q-1) for
/// q > 1 (all u at q = 1); throws std::domain_error outside that range.
double q_exp(QParam q, double u);

/// kappa_q(y) = ln_q(1/y) for y in [0,1]. kappa_q(1) = 0 exactly;
/// kappa_q(0) = +inf for q <= 1 and 1/(q-1) for q > 1 (continuous extension).
ExtendedReal coder(QParam q, double y);

/// kappa_q'(y) = -y^(q-2) for y in (0,1]. Equals -1 exactly at y = 1.
double coder_derivative(QParam q, double y);

/// pi_q(x,y) = qx + (1-q)y for x,y in [0,1], evaluated as y + q*(x - y) so
/// that pi_q(t,t) == t without rounding. At q = 1 returns x exactly.
double interaction(QParam q, double x, double y);

}  // namespace qtb
