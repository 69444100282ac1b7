// support.hpp
// ===========
// Approximate supports: a nonzero coefficient vector a is eps-supported on M
// (w.r.t. the p-norm) when the complement tail carries at most an eps
// fraction of the total norm,
//
//     restricted_p_norm(a, M^c, p) <= eps * p_norm(a, p).
//
// minimal_support picks the canonical smallest such M: sort entries by
// falling modulus (ties by ascending index) and keep the shortest prefix
// whose tail passes. Dropping the largest entries first minimises the tail
// norm at every cardinality, so the greedy prefix has minimum cardinality.

#pragma once

#include <numeric>
#include <utility>

#include "dsup/pnorm.hpp"

namespace dsup {

// Absolute slack used when comparing a tail ratio against eps, so boundary
// cases such as 3/5 vs 0.6 do not flap under rounding.
inline constexpr double kEpsilonComparisonTol = 1e-12;

inline void require_support_level(double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw std::domain_error("support level must satisfy 0 <= eps < 1, got " +
                            std::to_string(eps));
  }
}

/// Smallest eps for which a is eps-supported on M: tail norm over total norm.
inline double epsilon_of_support(const Vector& a, const SupportSet& M, double p) {
  const double total = p_norm(a, p);
  if (total == 0.0) {
    throw std::invalid_argument("epsilon_of_support: zero vector has no support level");
  }
  const int n = static_cast<int>(a.size());
  M.require_within(n);
  return restricted_p_norm(a, M.complement(n), p) / total;
}

inline bool is_epsilon_supported(const Vector& a, const SupportSet& M, double eps,
                                 double p) {
  require_support_level(eps);
  return epsilon_of_support(a, M, p) <= eps + kEpsilonComparisonTol;
}

/// Indices 1..n ordered by falling |a_j|, ties by ascending index.
inline std::vector<int> indices_by_falling_modulus(const Vector& a) {
  std::vector<int> order(static_cast<std::size_t>(a.size()));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&a](int i, int j) {
    return std::abs(a[i - 1]) > std::abs(a[j - 1]);
  });
  return order;
}

/// Minimum-cardinality eps-support of a, greedy by falling modulus. Always
/// nonempty for a != 0 (the empty set is an eps-support only when eps >= 1).
inline SupportSet minimal_support(const Vector& a, double eps, double p) {
  require_support_level(eps);
  const double total = p_norm(a, p);
  if (total == 0.0) {
    throw std::invalid_argument("minimal_support: zero vector has no support");
  }
  const int n = static_cast<int>(a.size());
  const std::vector<int> order = indices_by_falling_modulus(a);
  std::vector<int> kept;
  kept.reserve(order.size());
  for (int k = 0; k < n; ++k) {
    kept.push_back(order[static_cast<std::size_t>(k)]);
    SupportSet M{kept};
    if (epsilon_of_support(a, M, p) <= eps + kEpsilonComparisonTol) {
      return M;
    }
  }
  return SupportSet::full(n);
}

/// Minimal support cardinality per eps over a strictly increasing grid.
inline std::vector<std::pair<double, int>> support_profile(
    const Vector& a, double p, const std::vector<double>& grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require_support_level(grid[i]);
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::domain_error("support_profile: grid must be strictly increasing");
    }
  }
  std::vector<std::pair<double, int>> profile;
  profile.reserve(grid.size());
  for (double eps : grid) {
    profile.emplace_back(eps, minimal_support(a, eps, p).cardinality());
  }
  return profile;
}

}  // namespace dsup
