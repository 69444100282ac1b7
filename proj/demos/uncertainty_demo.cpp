// Walkthrough of the library on the classical example: the spike/Fourier
// pair in dimension 16, where the spacing-4 comb meets the support-product
// bound with equality.

#include <cstdio>

#include "dsup/dsup.hpp"

int main() {
  const int m = 4;
  const int n = m * m;
  dsup::BasisPair pair = dsup::make_fourier_pair(n);
  std::printf("pair: n=%d p=%g mu_A=%g mu_B=%g isometry=%s\n", pair.n, pair.holder.p,
              pair.mu_A, pair.mu_B, dsup::to_string(pair.isometry_status));

  // The comb is its own analysis picture up to relabeling: both coefficient
  // vectors are m-sparse, so o(M) o(N) = n exactly matches the bound.
  dsup::Witness comb = dsup::picket_fence(m);
  std::printf("comb: o(M)=%d o(N)=%d lhs=%.17g rhs=%.17g slack=%.3g\n",
              comb.report.M.cardinality(), comb.report.N.cardinality(), comb.report.lhs_V,
              comb.report.rhs_V, comb.report.slack_V);

  // A generic vector is far from tight: its minimal supports are fat on both
  // sides, leaving a large positive slack.
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  dsup::Vector x(n);
  for (int i = 0; i < n; ++i) x[i] = dsup::Complex(gauss(rng), gauss(rng));
  dsup::VerificationReport generic = dsup::verify_uncertainty(pair, x, 0.1, 0.1);
  std::printf("generic: o(M)=%d o(N)=%d slack=%.3g holds=%d\n", generic.M.cardinality(),
              generic.N.cardinality(), generic.slack_V, generic.holds ? 1 : 0);

  // The proof squeezes the compression V = P_M A P_N between a witnessed
  // lower bound and a coherence-counting upper bound.
  dsup::ProjectedOperator V =
      dsup::build_projected_operator(pair, comb.report.M, comb.report.N, dsup::OperatorKind::V);
  dsup::NormEstimate est = dsup::estimate_p_operator_norm(V);
  const double upper = dsup::operator_norm_upper(pair, comb.report.M, comb.report.N,
                                                 dsup::OperatorKind::V);
  std::printf("compression: estimate=%.12g upper=%.12g\n", est.value, upper);
  return 0;
}
