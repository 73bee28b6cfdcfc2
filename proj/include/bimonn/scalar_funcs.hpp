#ifndef BIMONN_SCALAR_FUNCS_HPP
#define BIMONN_SCALAR_FUNCS_HPP

#include <algorithm>
#include <cmath>

namespace bimonn {

/// Smooth threshold mapping R onto (0,1), xi(0) = 0.5.
inline double xi(double x) { return 0.5 * std::tanh(x) + 0.5; }

inline double xi_grad(double x) {
  const double t = std::tanh(x);
  return 0.5 * (1.0 - t * t);
}

inline double sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

/// Shifted softplus, always > 0.5. Overflow-safe for large |x|.
inline double softplus_half(double x) {
  return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))) + 0.5;
}

inline double softplus_half_grad(double x) { return sigmoid(x); }

/// Inverse of softplus_half on (0.5, inf).
inline double softplus_half_inverse(double y) {
  const double t = y - 0.5;
  // expm1 keeps precision near t = 0.
  return std::log(std::expm1(t));
}

/// Plain softplus, >= 0; used for nonnegative channel coefficients.
inline double softplus(double x) {
  return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

inline double softplus_grad(double x) { return sigmoid(x); }

inline double softplus_inverse(double y) { return std::log(std::expm1(y)); }

}  // namespace bimonn

#endif  // BIMONN_SCALAR_FUNCS_HPP
