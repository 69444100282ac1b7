// types.hpp
// =========
// Scalar aliases, Holder exponent pairs, and 1-based index sets shared by
// every dsup header.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace dsup {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Accepted exponent range for Holder pairs. The endpoints are excluded:
// p -> 1 and p -> infinity both break the conjugate-exponent arithmetic.
inline constexpr double kMinHolderExponent = 1.0 + 1e-9;
inline constexpr double kMaxHolderExponent = 1e9;

/// Conjugate exponent q with 1/p + 1/q = 1.
inline double conjugate_index(double p) {
  if (!std::isfinite(p) || p <= kMinHolderExponent || p >= kMaxHolderExponent) {
    throw std::domain_error("conjugate_index: exponent must lie in (1, inf), got " +
                            std::to_string(p));
  }
  return p / (p - 1.0);
}

/// An exponent p in (1, inf) together with its conjugate q.
struct HolderPair {
  double p;
  double q;

  explicit HolderPair(double exponent) : p(exponent), q(conjugate_index(exponent)) {}
};

/// A subset of {1, ..., n}, stored sorted and duplicate-free. Indices are
/// 1-based everywhere in the public interface.
class SupportSet {
 public:
  SupportSet() = default;

  explicit SupportSet(std::vector<int> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.front() < 1) {
      throw std::out_of_range("SupportSet: indices are 1-based, got " +
                              std::to_string(indices_.front()));
    }
  }

  static SupportSet full(int n) {
    std::vector<int> idx(static_cast<std::size_t>(std::max(n, 0)));
    for (int j = 0; j < n; ++j) idx[static_cast<std::size_t>(j)] = j + 1;
    return SupportSet(std::move(idx));
  }

  /// Complement within {1, ..., n}.
  SupportSet complement(int n) const {
    require_within(n);
    std::vector<int> idx;
    idx.reserve(static_cast<std::size_t>(n) - indices_.size());
    auto it = indices_.begin();
    for (int j = 1; j <= n; ++j) {
      if (it != indices_.end() && *it == j) {
        ++it;
      } else {
        idx.push_back(j);
      }
    }
    return SupportSet(std::move(idx));
  }

  int cardinality() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  int max_index() const { return indices_.empty() ? 0 : indices_.back(); }

  bool contains(int j) const {
    return std::binary_search(indices_.begin(), indices_.end(), j);
  }

  const std::vector<int>& indices() const { return indices_; }

  void require_within(int n) const {
    if (max_index() > n) {
      throw std::out_of_range("SupportSet: index " + std::to_string(max_index()) +
                              " outside {1,...," + std::to_string(n) + "}");
    }
  }

  friend bool operator==(const SupportSet& a, const SupportSet& b) {
    return a.indices_ == b.indices_;
  }

 private:
  std::vector<int> indices_;
};

}  // namespace dsup
