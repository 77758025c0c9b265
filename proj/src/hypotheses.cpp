#include "nlpl/hypotheses.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "nlpl/errors.hpp"

namespace nlpl {

HypothesisReport validate_hypotheses(const SourceFunction& source, double lo,
                                     double hi, int samples) {
  if (samples < 2) throw ConfigError("validate_hypotheses: samples must be >= 2");
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi))
    throw ConfigError("validate_hypotheses: range must be finite with lo < hi");

  const double R = std::max(std::abs(lo), std::abs(hi));
  const double L = source.lipschitz_bound(R);

  std::vector<double> xi(static_cast<std::size_t>(samples));
  std::vector<double> fx(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / (samples - 1);
    const double f = source(x);
    if (!std::isfinite(f))
      throw EvaluationError("source evaluated to a non-finite value at xi=" +
                                std::to_string(x), x);
    xi[static_cast<std::size_t>(i)] = x;
    fx[static_cast<std::size_t>(i)] = f;
  }

  HypothesisReport rep;
  rep.lipschitz_declared = L;

  // sigma <= f
  rep.lower_bound.margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double m = fx[i] - source.sigma;
    if (m < rep.lower_bound.margin) {
      rep.lower_bound.margin = m;
      rep.lower_bound.worst_xi = xi[i];
      rep.lower_bound.worst_value = fx[i];
    }
  }
  rep.lower_bound.pass = rep.lower_bound.margin >= 0.0;

  // f <= c1|xi|^(alpha+1) + c2
  rep.growth.margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double cap =
        source.c1 * std::pow(std::abs(xi[i]), source.alpha + 1.0) + source.c2;
    const double m = cap - fx[i];
    if (m < rep.growth.margin) {
      rep.growth.margin = m;
      rep.growth.worst_xi = xi[i];
      rep.growth.worst_value = fx[i];
    }
  }
  rep.growth.pass = rep.growth.margin >= 0.0;

  // |f(xi1)-f(xi2)| <= L(R) |xi1-xi2| over adjacent samples. A hair of
  // headroom absorbs roundoff in the difference quotient.
  rep.lipschitz_worst_ratio = 0.0;
  for (int i = 0; i + 1 < samples; ++i) {
    const double ratio = std::abs(fx[i + 1] - fx[i]) / (xi[i + 1] - xi[i]);
    if (ratio > rep.lipschitz_worst_ratio) {
      rep.lipschitz_worst_ratio = ratio;
      rep.lipschitz.worst_xi = xi[i];
      rep.lipschitz.worst_value = ratio;
    }
  }
  rep.lipschitz.margin = L - rep.lipschitz_worst_ratio;
  rep.lipschitz.pass = rep.lipschitz_worst_ratio <= L * (1.0 + 1e-12) + 1e-300;

  return rep;
}

}  // namespace nlpl
