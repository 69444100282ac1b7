// search.hpp
// ==========
// Witness constructions: vectors that make the support inequalities tight or
// nearly so, plus a random probe of how much slack typical vectors leave.

#pragma once

#include "dsup/bounds.hpp"

namespace dsup {

/// A probed vector together with the levels it was checked at and the full
/// verification it produced.
struct Witness {
  Vector x;
  double eps = 0.0;
  double delta = 0.0;
  VerificationReport report;
};

/// The classical extremal example: in dimension n = m^2 the spike comb with
/// spacing m is mapped by the Fourier pair to another spacing-m comb, so with
/// eps = delta = 0 both supports have size m and o(M) o(N) = n exactly. The
/// returned report has zero slack up to roundoff.
inline Witness picket_fence(int m) {
  if (m < 1) throw std::domain_error("picket_fence: m must be >= 1");
  const int n = m * m;
  BasisPair pair = make_fourier_pair(n);
  Vector x = Vector::Zero(n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(m));
  for (int t = 0; t < m; ++t) x[t * m] = Complex(amp, 0.0);
  Witness w;
  w.x = std::move(x);
  w.eps = 0.0;
  w.delta = 0.0;
  w.report = verify_uncertainty(pair, w.x, 0.0, 0.0);
  return w;
}

namespace detail {

inline Vector random_dense_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = Complex(gauss(rng), gauss(rng));
  return x;
}

// Comb with a stride drawn from the divisors of n: the structured family
// that actually gets close to equality for Fourier-like pairs.
inline Vector random_comb_vector(int n, std::mt19937_64& rng) {
  std::vector<int> divisors;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  const int d = divisors[std::uniform_int_distribution<std::size_t>(
      0, divisors.size() - 1)(rng)];
  const int offset = std::uniform_int_distribution<int>(0, d - 1)(rng);
  Vector x = Vector::Zero(n);
  for (int i = offset; i < n; i += d) x[i] = Complex(1.0, 0.0);
  return x;
}

inline Vector random_sparse_vector(int n, std::mt19937_64& rng) {
  const int size = std::uniform_int_distribution<int>(1, n)(rng);
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  const bool sign_only = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
  Vector x = Vector::Zero(n);
  for (int t = 0; t < size; ++t) {
    if (sign_only) {
      x[idx[t]] = Complex(std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? 1.0 : -1.0, 0.0);
    } else {
      const double a = angle(rng);
      x[idx[t]] = Complex(std::cos(a), std::sin(a));
    }
  }
  return x;
}

}  // namespace detail

/// Seeded random search for the vector with the least V-side slack at fixed
/// levels. Alternates dense Gaussian draws with structured ones (combs on
/// divisor strides, flat-modulus sparse vectors) since structure is where
/// near-equality lives. Ties keep the earliest trial, so a fixed seed pins
/// the result exactly. Optionally logs every trial's report.
inline Witness random_tightness_search(const BasisPair& pair, double eps, double delta,
                                       int trials, std::uint64_t seed,
                                       std::vector<VerificationReport>* trial_log = nullptr) {
  if (trials < 1) throw std::domain_error("random_tightness_search: trials must be >= 1");
  require_support_level(eps);
  require_support_level(delta);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Witness best;
  bool have_best = false;
  for (int t = 0; t < trials; ++t) {
    Vector x;
    if (t % 2 == 0) {
      x = detail::random_dense_vector(pair.n, rng);
    } else if (unit(rng) < 0.3) {
      x = detail::random_comb_vector(pair.n, rng);
    } else {
      x = detail::random_sparse_vector(pair.n, rng);
    }
    VerificationReport report = verify_uncertainty(pair, x, eps, delta);
    if (trial_log != nullptr) trial_log->push_back(report);
    if (!have_best || report.slack_V < best.report.slack_V) {
      best.x = std::move(x);
      best.eps = eps;
      best.delta = delta;
      best.report = std::move(report);
      have_best = true;
    }
  }
  return best;
}

/// Verification of one fixed vector at each (eps, delta) level in the grid,
/// in grid order.
inline std::vector<VerificationReport> slack_landscape(
    const BasisPair& pair, const Vector& x,
    const std::vector<std::pair<double, double>>& grid) {
  if (grid.empty()) throw std::invalid_argument("slack_landscape: grid must be nonempty");
  std::vector<VerificationReport> out;
  out.reserve(grid.size());
  for (const auto& [e, d] : grid) out.push_back(verify_uncertainty(pair, x, e, d));
  return out;
}

}  // namespace dsup
