#pragma once

#include "nlpl/source_function.hpp"

namespace nlpl {

// Outcome of one sampled inequality check.
struct CheckResult {
  bool pass = true;
  double worst_xi = 0.0;   // sample (or left endpoint of the worst pair)
  double worst_value = 0.0;
  double margin = 0.0;     // slack at the worst sample; negative on failure
};

struct HypothesisReport {
  CheckResult lower_bound;  // sigma <= f(xi)
  CheckResult growth;       // f(xi) <= c1|xi|^(alpha+1) + c2
  CheckResult lipschitz;    // adjacent-sample ratio <= L(R)
  double lipschitz_worst_ratio = 0.0;
  double lipschitz_declared = 0.0;

  bool pass() const { return lower_bound.pass && growth.pass && lipschitz.pass; }
};

// Samples f on a uniform grid over [lo, hi] and tests the two (H2)
// inequalities plus the Lipschitz ratio against the declared L(R),
// R = max(|lo|, |hi|). Deterministic for a fixed grid.
// Throws EvaluationError if f returns a non-finite value.
HypothesisReport validate_hypotheses(const SourceFunction& source, double lo,
                                     double hi, int samples);

}  // namespace nlpl
