// Shared helpers for the test suite. The oracles here are deliberately
// written against the definitions, not the library code paths: naive
// textbook loops, exhaustive enumeration, and dense SVD.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <complex>
#include <filesystem>
#include <numeric>
#include <random>
#include <vector>

#include "dsup/types.hpp"

namespace testutil {

inline dsup::Vector random_complex_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  dsup::Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = dsup::Complex(gauss(rng), gauss(rng));
  return x;
}

inline dsup::Vector random_sparse_vector(int n, int nnz, std::mt19937_64& rng) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  std::normal_distribution<double> gauss(0.0, 1.0);
  dsup::Vector x = dsup::Vector::Zero(n);
  for (int t = 0; t < nnz; ++t) x[idx[t]] = dsup::Complex(gauss(rng), gauss(rng));
  return x;
}

// Textbook p-norm, no rescaling, no shortcuts.
inline double naive_p_norm(const dsup::Vector& v, double p) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) acc += std::pow(std::abs(v[i]), p);
  return std::pow(acc, 1.0 / p);
}

// Exhaustive minimum cardinality of an eps-support: try all subsets of
// {1..n}, using the same acceptance rule (tail <= (eps + 1e-12) * total) but
// independent arithmetic. n <= ~16 only.
inline int exhaustive_min_support_cardinality(const dsup::Vector& v, double eps, double p) {
  const int n = static_cast<int>(v.size());
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = std::pow(std::abs(v[i]), p);
  const double total = naive_p_norm(v, p);
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) >= best) continue;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) acc += w[static_cast<std::size_t>(i)];
    }
    const double tail = std::pow(acc, 1.0 / p);
    if (tail <= (eps + 1e-12) * total) best = __builtin_popcount(mask);
  }
  return best;
}

// Largest singular value, the exact 2->2 operator norm.
inline double svd_norm(const dsup::Matrix& M) {
  Eigen::JacobiSVD<dsup::Matrix> svd(M);
  return svd.singularValues()(0);
}

// Haar-ish random unitary via QR of a Gaussian matrix.
inline dsup::Matrix random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  dsup::Matrix G(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) G(i, j) = dsup::Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<dsup::Matrix> qr(G);
  dsup::Matrix Q = qr.householderQ();
  return Q;
}

// Random invertible matrix with a bounded condition number: U diag(s) V^*
// with singular values in [0.5, 2].
inline dsup::Matrix random_well_conditioned(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> sv(0.5, 2.0);
  dsup::Matrix U = random_unitary(n, rng);
  dsup::Matrix V = random_unitary(n, rng);
  dsup::Vector s(n);
  for (int i = 0; i < n; ++i) s[i] = dsup::Complex(sv(rng), 0.0);
  return U * s.asDiagonal() * V.adjoint();
}

struct GenPermSpec {
  std::vector<int> perm;                  // 1-based targets
  std::vector<dsup::Complex> phases;
};

// Scratch file path under the system temp dir, unique per call.
inline std::string temp_path(const std::string& stem) {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path() / "dsup_tests";
  std::filesystem::create_directories(dir);
  return (dir / (stem + "_" + std::to_string(counter++) + ".json")).string();
}

inline GenPermSpec random_genperm(int n, std::mt19937_64& rng) {
  GenPermSpec spec;
  spec.perm.resize(n);
  std::iota(spec.perm.begin(), spec.perm.end(), 1);
  std::shuffle(spec.perm.begin(), spec.perm.end(), rng);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
  spec.phases.resize(n);
  for (int i = 0; i < n; ++i) {
    const double a = angle(rng);
    spec.phases[i] = dsup::Complex(std::cos(a), std::sin(a));
  }
  return spec;
}

}  // namespace testutil
