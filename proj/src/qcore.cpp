#include "qtb/qcore.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qtb {

QParam::QParam(double q) : q_(q) {
  if (!std::isfinite(q)) {
    throw std::domain_error("QParam: q must be finite");
  }
  if (q < 0.0) {
    throw std::domain_error("QParam: q must be non-negative, got " + std::to_string(q));
  }
  if (q > kMaxQ) {
    throw std::domain_error("QParam: q exceeds cap " + std::to_string(kMaxQ));
  }
}

bool QParam::is_classical() const { return std::abs(q_ - 1.0) < kBranchWindow; }

double q_log(QParam q, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("q_log: x must be positive and finite");
  }
  if (q.is_classical()) {
    return std::log(x);
  }
  const double om = 1.0 - q.value();
  return (std::pow(x, om) - 1.0) / om;
}

double q_exp(QParam q, double u) {
  if (std::isnan(u)) {
    throw std::domain_error("q_exp: u must not be NaN");
  }
  if (q.is_classical()) {
    return std::exp(u);
  }
  const double om = 1.0 - q.value();
  // Invertibility: 1 + (1-q)u must stay positive (zero allowed when the
  // exponent 1/(1-q) is positive, i.e. q < 1).
  if (om > 0.0) {
    if (u < -1.0 / om) {
      throw std::domain_error("q_exp: u below -1/(1-q)");
    }
  } else {
    if (u >= -1.0 / om) {
      throw std::domain_error("q_exp: u at or above 1/(q-1)");
    }
  }
  double base = 1.0 + om * u;
  if (base < 0.0) base = 0.0;  // u passed the range check; rounding artifact
  return std::pow(base, 1.0 / om);
}

ExtendedReal coder(QParam q, double y) {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw std::domain_error("coder: y must lie in [0,1]");
  }
  if (q.is_classical()) {
    if (y == 0.0) return ExtendedReal::infinity();
    return ExtendedReal(-std::log(y));
  }
  const double qq = q.value();
  if (y == 0.0) {
    if (qq > 1.0) return ExtendedReal(1.0 / (qq - 1.0));
    return ExtendedReal::infinity();
  }
  // ln_q(1/y) = (y^(q-1) - 1)/(1-q)
  return ExtendedReal((std::pow(y, qq - 1.0) - 1.0) / (1.0 - qq));
}

double coder_derivative(QParam q, double y) {
  if (!(y > 0.0 && y <= 1.0)) {
    throw std::domain_error("coder_derivative: y must lie in (0,1]");
  }
  return -std::pow(y, q.value() - 2.0);
}

double interaction(QParam q, double x, double y) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("interaction: x must lie in [0,1]");
  }
  if (!(y >= 0.0 && y <= 1.0)) {
    throw std::domain_error("interaction: y must lie in [0,1]");
  }
  if (q.is_classical()) {
    return x;
  }
  return y + q.value() * (x - y);
}

}  // namespace qtb
