#pragma once

#include <cstdint>
#include <vector>

namespace nlpl {

// Data of the comparison lemma: y' + gamma_g y^nu <= delta with nu > 1,
// gamma_g > 0, delta >= 0. gamma_g is the lemma's own constant, distinct from
// the exponent gamma = k0/p carried by trajectory records.
struct GhidagliaParams {
  double gamma_g = 1.0;
  double nu = 2.0;
  double delta = 0.0;

  void validate() const;
};

// Closed-form envelope (delta/gamma)^(1/nu) + (gamma (nu-1) t)^(-1/(nu-1)).
// At t = 0 the second term is infinite; the returned +inf is a valid signal,
// not an error.
double ghidaglia_bound(double t, const GhidagliaParams& params);

struct GhidagliaProbeReport {
  bool pass = false;
  double worst_margin = 0.0;  // max over samples of y/bound - 1
  double worst_time = 0.0;
  int samples = 0;
};

// Integrates the extremal admissible trajectory y' = -gamma y^nu + delta
// (every solution of the differential inequality is dominated by it) with an
// adaptive integrator and checks y(t) <= bound(t) (1 + 1e-6) at >= 100
// geometrically spaced times in (0, t_end].
GhidagliaProbeReport verify_ghidaglia(const GhidagliaParams& params, double y0,
                                      double t_end, int sample_count = 120);

struct GhidagliaSuiteReport {
  bool pass = false;
  int draws = 0;
  double worst_margin = 0.0;
  std::vector<GhidagliaProbeReport> runs;
};

// Randomized suite over gamma in [0.1,10], nu in (1,3], delta in [0,10],
// y0 in (0,100], seeded for reproducibility.
GhidagliaSuiteReport ghidaglia_suite(int draws, std::uint64_t seed, double t_end);

}  // namespace nlpl
