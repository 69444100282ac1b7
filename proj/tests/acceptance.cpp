// Acceptance harness: one line per criterion, nonzero exit on any failure.
// Every check is seeded, so a passing build passes forever.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dsup/dsup.hpp"
#include "testutil.hpp"

using dsup::BasisPair;
using dsup::Complex;
using dsup::OperatorKind;
using dsup::ProjectedOperator;
using dsup::SupportSet;
using dsup::Vector;
using dsup::VerificationReport;

namespace {

constexpr double kTol = 1e-9;

int g_failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", index, name,
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
  va_list args;
  va_start(args, f);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

// Witness-side accumulator for the compression lower bounds: every vector
// verified in criteria 1-3 also certifies ||V b|| >= clamp ||b|| and
// ||W a|| >= clamp ||a||. Criterion 5 reports the worst margins seen.
struct WitnessBounds {
  long checks = 0;
  long violations = 0;
  double worst_margin = 1e300;

  void feed(const BasisPair& pair, const Vector& a, const Vector& b,
            const VerificationReport& r) {
    const double clamp = std::max(1.0 - r.eps - r.delta, 0.0);
    const ProjectedOperator V = dsup::build_projected_operator(pair, r.M, r.N, OperatorKind::V);
    const ProjectedOperator W = dsup::build_projected_operator(pair, r.M, r.N, OperatorKind::W);
    for (double got : {dsup::witness_lower_bound(V, b), dsup::witness_lower_bound(W, a)}) {
      ++checks;
      const double margin = got - clamp;
      worst_margin = std::min(worst_margin, margin);
      if (margin < -kTol) ++violations;
    }
  }
};

WitnessBounds g_witness_bounds;

// Pairs built anywhere in the run, checked globally by criterion 6.
struct ResidualLog {
  double worst = 0.0;
  long count = 0;
  void add(const BasisPair& pair) {
    worst = std::max(worst, pair.inverse_residual);
    ++count;
  }
};

ResidualLog g_residuals;

void criterion1_fourier_support_product() {
  const auto start = std::chrono::steady_clock::now();
  const double levels[] = {0.0, 0.1, 0.2, 0.3};
  long checks = 0;
  long violations = 0;
  double min_slack = 1e300;

  for (int n : {4, 8, 16, 64}) {
    const BasisPair pair = dsup::make_fourier_pair(n);
    g_residuals.add(pair);
    std::mt19937_64 rng(100 + static_cast<unsigned>(n));
    for (int t = 0; t < 1000; ++t) {
      const Vector a = testutil::random_complex_vector(n, rng);
      const Vector b = dsup::analysis_in_g(pair, a);
      SupportSet M[4], N[4];
      for (int i = 0; i < 4; ++i) {
        M[i] = dsup::minimal_support(a, levels[i], 2.0);
        N[i] = dsup::minimal_support(b, levels[i], 2.0);
      }
      for (int ei = 0; ei < 4; ++ei) {
        for (int di = 0; di < 4; ++di) {
          const double eps = levels[ei];
          const double delta = levels[di];
          const double product =
              static_cast<double>(M[ei].cardinality()) * N[di].cardinality();
          const double clamp = std::max(1.0 - eps - delta, 0.0);
          const double bound = n * clamp * clamp;
          ++checks;
          min_slack = std::min(min_slack, product - bound);
          if (product < bound - kTol) ++violations;

          VerificationReport r;
          r.eps = eps;
          r.delta = delta;
          r.M = M[ei];
          r.N = N[di];
          g_witness_bounds.feed(pair, a, b, r);
        }
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(1, "support product bound on the Fourier pair",
         violations == 0 && seconds < 60.0,
         fmt("%ld checks, %ld violations, min slack %.3g, %.1f s", checks, violations,
             min_slack, seconds));
}

void criterion2_picket_equality() {
  bool pass = true;
  std::string detail;
  for (int m : {1, 2, 3, 4}) {
    const dsup::Witness w = dsup::picket_fence(m);
    const BasisPair pair = dsup::make_fourier_pair(m * m);
    g_residuals.add(pair);
    const bool ok = std::abs(w.report.slack_V) <= kTol && std::abs(w.report.slack_W) <= kTol &&
                    w.report.M.cardinality() == m && w.report.N.cardinality() == m;
    pass = pass && ok;
    detail += fmt("m=%d slack=%.2g o=%dx%d%s", m, w.report.slack_V, w.report.M.cardinality(),
                  w.report.N.cardinality(), m < 4 ? ", " : "");
    g_witness_bounds.feed(pair, w.x, dsup::analysis_in_g(pair, w.x), w.report);
  }
  report(2, "comb witnesses meet the bound exactly", pass, detail);
}

void criterion3_genperm_levels() {
  const double levels[] = {0.0, 0.2, 0.45};
  long checks = 0;
  long violations = 0;
  double min_slack = 1e300;

  unsigned pair_seed = 900;
  for (double p : {1.5, 3.0}) {
    for (int n : {5, 16}) {
      std::mt19937_64 rng(pair_seed++);
      const auto spec = testutil::random_genperm(n, rng);
      const BasisPair pair = dsup::make_generalized_permutation_pair(n, p, spec.perm,
                                                                     spec.phases);
      g_residuals.add(pair);
      for (int t = 0; t < 500; ++t) {
        const Vector a = t % 4 == 3 ? testutil::random_sparse_vector(n, 1 + t % n, rng)
                                    : testutil::random_complex_vector(n, rng);
        if (dsup::p_norm(a, p) == 0.0) continue;
        const Vector b = dsup::analysis_in_g(pair, a);
        for (double eps : levels) {
          for (double delta : levels) {
            const VerificationReport r = dsup::verify_uncertainty(pair, a, eps, delta);
            ++checks;
            min_slack = std::min({min_slack, r.slack_V, r.slack_W});
            if (r.slack_V < -kTol || r.slack_W < -kTol) ++violations;
            g_witness_bounds.feed(pair, a, b, r);
          }
        }
      }
    }
  }
  report(3, "both inequalities on permutation pairs, p != 2", violations == 0,
         fmt("%ld checks, %ld violations, min slack %.3g", checks, violations, min_slack));
}

void criterion4_counting_bound() {
  long checks = 0;
  long violations = 0;
  double worst = 1e300;  // min of (upper*||y|| - ||op y||)

  const double ps[] = {1.5, 2.0, 3.0};
  std::mt19937_64 rng(400);
  for (int i = 0; i < 200; ++i) {
    const double p = ps[i % 3];
    const int n = 2 + i % 7;
    BasisPair pair;
    if (p == 2.0 && i % 2 == 0) {
      pair = dsup::make_fourier_pair(n);
    } else if (i % 5 == 1) {
      pair = dsup::make_pair_from_matrix(testutil::random_well_conditioned(n, rng), p, 4);
    } else {
      const auto spec = testutil::random_genperm(n, rng);
      pair = dsup::make_generalized_permutation_pair(n, p, spec.perm, spec.phases);
    }
    g_residuals.add(pair);
    std::vector<int> mi, ni;
    for (int j = 1; j <= n; ++j) {
      if (std::uniform_int_distribution<int>(0, 1)(rng)) mi.push_back(j);
      if (std::uniform_int_distribution<int>(0, 1)(rng)) ni.push_back(j);
    }
    const SupportSet M(mi), N(ni);
    const Vector y = testutil::random_complex_vector(n, rng);
    const double ny = dsup::p_norm(y, p);
    for (auto kind : {OperatorKind::V, OperatorKind::W}) {
      const ProjectedOperator op = dsup::build_projected_operator(pair, M, N, kind);
      const double upper = dsup::operator_norm_upper(pair, M, N, kind);
      const double lhs = dsup::p_norm(op.matrix * y, p);
      ++checks;
      worst = std::min(worst, upper * ny + kTol - lhs);
      if (lhs > upper * ny + kTol) ++violations;
    }
  }
  report(4, "compression norms bounded by coherence counting", violations == 0,
         fmt("%ld checks, %ld violations, min headroom %.3g", checks, violations, worst));
}

void criterion5_witness_lower_bounds() {
  report(5, "analysis witnesses certify the clamp on V and W",
         g_witness_bounds.violations == 0 && g_witness_bounds.checks > 0,
         fmt("%ld checks across criteria 1-3, %ld violations, worst margin %.3g",
             g_witness_bounds.checks, g_witness_bounds.violations,
             g_witness_bounds.worst_margin));
}

void criterion6_inverse_residuals() {
  // Fold in loaded pairs as well: save/load round trips of each family.
  std::mt19937_64 rng(600);
  {
    const std::string path = testutil::temp_path("acc_unitary");
    dsup::save_pair(dsup::make_pair_from_matrix(testutil::random_unitary(6, rng), 2.0), path);
    g_residuals.add(dsup::load_pair(path));
  }
  {
    const std::string path = testutil::temp_path("acc_dense");
    dsup::save_pair(dsup::make_pair_from_matrix(testutil::random_well_conditioned(7, rng), 2.0),
                    path);
    g_residuals.add(dsup::load_pair(path));
  }
  {
    const std::string path = testutil::temp_path("acc_dft");
    dsup::save_pair(dsup::make_fourier_pair(12), path);
    g_residuals.add(dsup::load_pair(path));
  }
  report(6, "inverse transition residual stays below 1e-10",
         g_residuals.count > 0 && g_residuals.worst <= 1e-10,
         fmt("%ld pairs, worst max|AB - I| = %.3g", g_residuals.count, g_residuals.worst));
}

void criterion7_minimal_support_oracle() {
  long checks = 0;
  long mismatches = 0;
  std::mt19937_64 rng(700);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 12;
    Vector v(n);
    if (t % 3 == 0) {
      // Quantized moduli to force ties.
      std::uniform_int_distribution<int> level(0, 3);
      bool nonzero = false;
      for (int i = 0; i < n; ++i) {
        const double m = 0.25 * level(rng);
        v[i] = Complex(m, 0.0);
        nonzero = nonzero || m > 0.0;
      }
      if (!nonzero) v[0] = Complex(1.0, 0.0);
    } else {
      v = testutil::random_complex_vector(n, rng);
    }
    for (double p : {1.5, 2.0, 3.0}) {
      for (double eps : {0.0, 0.2, 0.5}) {
        const SupportSet M = dsup::minimal_support(v, eps, p);
        const int oracle = testutil::exhaustive_min_support_cardinality(v, eps, p);
        ++checks;
        if (M.cardinality() != oracle || !dsup::is_epsilon_supported(v, M, eps, p)) {
          ++mismatches;
        }
      }
    }
  }
  report(7, "greedy minimal supports have minimum cardinality", mismatches == 0,
         fmt("%ld cases against exhaustive enumeration, %ld mismatches", checks, mismatches));
}

void criterion8_norm_sandwich() {
  long checks = 0;
  long violations = 0;
  double worst_rel = 0.0;
  std::mt19937_64 rng(800);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 5;  // up to 6
    BasisPair pair;
    switch (i % 3) {
      case 0: pair = dsup::make_fourier_pair(n); break;
      case 1:
        pair = dsup::make_pair_from_matrix(testutil::random_unitary(n, rng), 2.0, 4);
        break;
      default:
        pair = dsup::make_pair_from_matrix(testutil::random_well_conditioned(n, rng), 2.0, 4);
        break;
    }
    g_residuals.add(pair);
    std::vector<int> mi, ni;
    for (int j = 1; j <= n; ++j) {
      if (std::uniform_int_distribution<int>(0, 1)(rng)) mi.push_back(j);
      if (std::uniform_int_distribution<int>(0, 1)(rng)) ni.push_back(j);
    }
    if (mi.empty()) mi.push_back(1 + static_cast<int>(rng() % n));
    if (ni.empty()) ni.push_back(1 + static_cast<int>(rng() % n));
    const SupportSet M(mi), N(ni);
    const auto kind = i % 2 == 0 ? OperatorKind::V : OperatorKind::W;
    const ProjectedOperator op = dsup::build_projected_operator(pair, M, N, kind);

    const double sigma = testutil::svd_norm(op.matrix);
    const dsup::NormEstimate est = dsup::estimate_p_operator_norm(op, 16, 20000, 800 + i);
    const double upper = dsup::operator_norm_upper(pair, M, N, kind);
    const double lower = est.value > 0.0 ? dsup::witness_lower_bound(op, est.maximizer) : 0.0;

    ++checks;
    const double rel = sigma > 0.0 ? std::abs(est.value - sigma) / sigma : est.value;
    worst_rel = std::max(worst_rel, rel);
    if (sigma < lower - kTol || sigma > upper + kTol || rel > 1e-6) ++violations;
  }
  report(8, "singular-value oracle sits inside the norm sandwich", violations == 0,
         fmt("%ld operators, %ld violations, worst relative gap %.3g", checks, violations,
             worst_rel));
}

void criterion9_cli_round_trip() {
  std::mt19937_64 rng(900);
  const BasisPair original = dsup::make_pair_from_matrix(testutil::random_unitary(6, rng), 2.0);
  const std::string first = testutil::temp_path("acc_roundtrip_a");
  const std::string copy = testutil::temp_path("acc_roundtrip_b");
  dsup::save_pair(original, first);

  dsup::RunConfig cfg;
  cfg.command = dsup::Command::verify;
  cfg.pair_source = dsup::parse_pair_source("load:" + first);
  cfg.eps = 0.1;
  cfg.delta = 0.2;
  cfg.seed = 12;
  cfg.write_pair_path = copy;
  const dsup::RunResult via_original = dsup::run_command(cfg);

  dsup::RunConfig cfg2 = cfg;
  cfg2.pair_source = dsup::parse_pair_source("load:" + copy);
  cfg2.write_pair_path.reset();
  const dsup::RunResult via_copy = dsup::run_command(cfg2);

  dsup::RunConfig coh = cfg2;
  coh.command = dsup::Command::coherence;
  dsup::RunConfig coh1 = cfg;
  coh1.command = dsup::Command::coherence;
  coh1.write_pair_path.reset();
  const bool coherence_same =
      dsup::run_command(coh1).document == dsup::run_command(coh).document;

  const bool verify_same = via_original.document == via_copy.document;
  g_residuals.add(dsup::load_pair(copy));
  report(9, "write-then-load reproduces documents byte-for-byte",
         verify_same && coherence_same && via_original.exit_code == 0,
         fmt("verify doc %s, coherence doc %s (%zu bytes)",
             verify_same ? "identical" : "differs", coherence_same ? "identical" : "differs",
             via_original.document.size()));
}

}  // namespace

int main() {
  criterion1_fourier_support_product();
  criterion2_picket_equality();
  criterion3_genperm_levels();
  criterion4_counting_bound();
  criterion5_witness_lower_bounds();
  criterion6_inverse_residuals();
  criterion7_minimal_support_oracle();
  criterion8_norm_sandwich();
  criterion9_cli_round_trip();

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
