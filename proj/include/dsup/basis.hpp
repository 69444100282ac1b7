// basis.hpp
// =========
// Pairs of p-orthonormal bases represented by their transition matrix.
//
// A pair is stored through A[j][k] = f_j(omega_k), the f-coordinates of the
// second basis, together with its inverse B[k][j] = g_k(tau_j). A vector x
// is represented by its f-coordinates a = theta_f x; the g-coordinates are
// theta_g x = B a. The pair is a genuine p-orthonormal pair exactly when
// z -> A z preserves the p-norm, which verify_isometry samples.

#pragma once

#include <random>

#include <Eigen/Dense>

#include "dsup/pnorm.hpp"

namespace dsup {

enum class IsometryStatus { verified, assumed, failed };

inline const char* to_string(IsometryStatus s) {
  switch (s) {
    case IsometryStatus::verified: return "verified";
    case IsometryStatus::assumed: return "assumed";
    case IsometryStatus::failed: return "failed";
  }
  return "unknown";
}

// Verification passes when the worst sampled relative norm deviation stays
// below this; the constructions here are exact, so anything above it is a
// real non-isometry rather than roundoff.
inline constexpr double kIsometryTol = 1e-9;
inline constexpr int kDefaultIsometryTrials = 64;

// Loaded matrices are refused when the estimated condition number exceeds
// 1e12: the inverse enters the reported bounds and must be trustworthy.
inline constexpr double kMaxConditionEstimate = 1e12;

struct IsometryCheck {
  IsometryStatus status = IsometryStatus::assumed;
  double max_relative_error = 0.0;
};

struct BasisPair {
  int n = 0;
  HolderPair holder{2.0};
  Matrix A;  // A(j,k) = f_j(omega_k), 0-based storage of 1-based indices
  Matrix B;  // B(k,j) = g_k(tau_j), the inverse transition
  double mu_A = 0.0;  // max entry modulus of A
  double mu_B = 0.0;  // max entry modulus of B
  IsometryStatus isometry_status = IsometryStatus::assumed;
  double isometry_error = 0.0;    // worst sampled relative norm deviation
  double inverse_residual = 0.0;  // max entry of |AB - I| and |BA - I|
};

inline double max_entry_modulus(const Matrix& M) {
  return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff();
}

/// Worst-case relative deviation |(||Az||_p - ||z||_p)| / ||z||_p over
/// `trials` seeded complex-normal draws plus every canonical coordinate
/// vector (structured matrices can fool dense random probes alone).
inline IsometryCheck verify_isometry_of(const Matrix& A, double p, int trials,
                                        std::uint64_t seed) {
  if (trials < 1) throw std::domain_error("verify_isometry: trials must be >= 1");
  const Eigen::Index n = A.rows();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  auto probe = [&](const Vector& z) {
    const double nz = p_norm(z, p);
    if (nz == 0.0) return;
    worst = std::max(worst, std::abs(p_norm(A * z, p) - nz) / nz);
  };
  for (int t = 0; t < trials; ++t) {
    Vector z(n);
    for (Eigen::Index j = 0; j < n; ++j) z[j] = Complex(gauss(rng), gauss(rng));
    probe(z);
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    probe(Vector::Unit(n, k));
  }
  IsometryCheck check;
  check.max_relative_error = worst;
  check.status = worst <= kIsometryTol ? IsometryStatus::verified : IsometryStatus::failed;
  return check;
}

inline IsometryCheck verify_isometry(const BasisPair& pair, int trials,
                                     std::uint64_t seed) {
  return verify_isometry_of(pair.A, pair.holder.p, trials, seed);
}

inline std::pair<double, double> coherence(const BasisPair& pair) {
  return {pair.mu_A, pair.mu_B};
}

namespace detail {

inline void finalize_pair(BasisPair& pair) {
  const Eigen::Index n = pair.A.rows();
  pair.mu_A = max_entry_modulus(pair.A);
  pair.mu_B = max_entry_modulus(pair.B);
  const Matrix I = Matrix::Identity(n, n);
  pair.inverse_residual = std::max(max_entry_modulus(pair.A * pair.B - I),
                                   max_entry_modulus(pair.B * pair.A - I));
}

}  // namespace detail

/// Standard-basis / Fourier-basis pair on C^n: p = 2,
/// A(j,k) = exp(-2 pi i (j-1)(k-1) / n) / sqrt(n), B = A^*.
inline BasisPair make_fourier_pair(int n) {
  if (n < 1) throw std::domain_error("make_fourier_pair: n must be >= 1");
  BasisPair pair;
  pair.n = n;
  pair.holder = HolderPair(2.0);
  pair.A = Matrix(n, n);
  const double root = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const double angle =
          -2.0 * M_PI * static_cast<double>(j) * static_cast<double>(k) / n;
      pair.A(j, k) = root * Complex(std::cos(angle), std::sin(angle));
    }
  }
  pair.B = pair.A.adjoint();
  pair.isometry_status = IsometryStatus::verified;
  pair.isometry_error = 0.0;
  detail::finalize_pair(pair);
  return pair;
}

/// Phase-weighted permutation pair: A e_k = phases[k] e_{perm[k]}. These are
/// exact l^p isometries for every p, the generic p != 2 family.
/// perm is 1-based; every phase must be unimodular within 1e-12.
inline BasisPair make_generalized_permutation_pair(int n, double p,
                                                   const std::vector<int>& perm,
                                                   const std::vector<Complex>& phases) {
  if (n < 1) throw std::domain_error("make_generalized_permutation_pair: n must be >= 1");
  if (static_cast<int>(perm.size()) != n || static_cast<int>(phases.size()) != n) {
    throw std::invalid_argument("generalized permutation: perm and phases must have length n");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("generalized permutation: perm is not a bijection of {1,...,n}");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  for (const Complex& w : phases) {
    if (std::abs(std::abs(w) - 1.0) > 1e-12) {
      throw std::invalid_argument("generalized permutation: phases must be unimodular");
    }
  }
  BasisPair pair;
  pair.n = n;
  pair.holder = HolderPair(p);
  pair.A = Matrix::Zero(n, n);
  pair.B = Matrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const int row = perm[static_cast<std::size_t>(k)] - 1;
    pair.A(row, k) = phases[static_cast<std::size_t>(k)];
    pair.B(k, row) = Complex(1.0, 0.0) / phases[static_cast<std::size_t>(k)];
  }
  pair.isometry_status = IsometryStatus::verified;
  pair.isometry_error = 0.0;
  detail::finalize_pair(pair);
  return pair;
}

/// Pair from an arbitrary square transition matrix. B is the LU inverse;
/// matrices with condition estimate above 1e12 are refused. With trials = 0
/// the isometry status is left `assumed`, otherwise it is sampled.
inline BasisPair make_pair_from_matrix(Matrix A, double p,
                                       int trials = kDefaultIsometryTrials,
                                       std::uint64_t seed = 0) {
  if (A.rows() < 1 || A.rows() != A.cols()) {
    throw std::invalid_argument("make_pair_from_matrix: matrix must be square and nonempty");
  }
  if (!A.allFinite()) {
    throw std::domain_error("make_pair_from_matrix: matrix has non-finite entries");
  }
  BasisPair pair;
  pair.n = static_cast<int>(A.rows());
  pair.holder = HolderPair(p);
  pair.A = std::move(A);
  Eigen::PartialPivLU<Matrix> lu(pair.A);
  const double rcond = lu.rcond();
  if (!(rcond >= 1.0 / kMaxConditionEstimate)) {
    throw std::runtime_error("singular matrix: condition estimate exceeds 1e12");
  }
  pair.B = lu.inverse();
  if (!pair.B.allFinite()) {
    throw std::runtime_error("singular matrix: inverse is not finite");
  }
  if (trials > 0) {
    const IsometryCheck check = verify_isometry_of(pair.A, p, trials, seed);
    pair.isometry_status = check.status;
    pair.isometry_error = check.max_relative_error;
  } else {
    pair.isometry_status = IsometryStatus::assumed;
    pair.isometry_error = 0.0;
  }
  detail::finalize_pair(pair);
  return pair;
}

/// g-coordinates theta_g x = B a of the vector with f-coordinates a.
inline Vector analysis_in_g(const BasisPair& pair, const Vector& f_coords) {
  require_coefficient_vector(f_coords);
  if (f_coords.size() != pair.n) {
    throw std::invalid_argument("analysis_in_g: dimension mismatch");
  }
  return pair.B * f_coords;
}

}  // namespace dsup
