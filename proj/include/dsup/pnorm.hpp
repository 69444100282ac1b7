// pnorm.hpp
// =========
// Vector l^p arithmetic on complex coefficient sequences.
//
// Norms are evaluated with the entries rescaled by their maximum modulus, so
// huge exponents neither overflow nor underflow the accumulation.

#pragma once

#include <cmath>

#include "dsup/types.hpp"

namespace dsup {

/// x^e for x >= 0, as exp(e log x) with the origin short-circuited to 0.
inline double rpow(double x, double e) {
  return x == 0.0 ? 0.0 : std::exp(e * std::log(x));
}

inline void require_coefficient_vector(const Vector& v) {
  if (v.size() < 1) {
    throw std::invalid_argument("coefficient vector must have at least one entry");
  }
  if (!v.allFinite()) {
    throw std::domain_error("coefficient vector has non-finite entries");
  }
}

inline void require_norm_exponent(double p) {
  if (!std::isfinite(p) || p < 1.0) {
    throw std::domain_error("norm exponent must satisfy 1 <= p < inf, got " +
                            std::to_string(p));
  }
}

/// (sum_j |v_j|^p)^(1/p). Zero exactly when v = 0.
inline double p_norm(const Vector& v, double p) {
  require_coefficient_vector(v);
  require_norm_exponent(p);
  const double scale = v.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    acc += rpow(std::abs(v[j]) / scale, p);
  }
  return scale * rpow(acc, 1.0 / p);
}

/// (sum_{j in S} |v_j|^p)^(1/p) over 1-based indices; 0 for S = {}.
inline double restricted_p_norm(const Vector& v, const SupportSet& S, double p) {
  require_coefficient_vector(v);
  require_norm_exponent(p);
  S.require_within(static_cast<int>(v.size()));
  if (S.empty()) return 0.0;
  double scale = 0.0;
  for (int j : S.indices()) scale = std::max(scale, std::abs(v[j - 1]));
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (int j : S.indices()) {
    acc += rpow(std::abs(v[j - 1]) / scale, p);
  }
  return scale * rpow(acc, 1.0 / p);
}

}  // namespace dsup
