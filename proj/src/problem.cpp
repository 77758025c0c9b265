#include "nlpl/problem.hpp"

#include <cmath>

#include "nlpl/errors.hpp"

namespace nlpl {

void DomainSpec::validate() const {
  if (dim != 1 && dim != 2) throw ConfigError("domain: dim must be 1 or 2");
  for (int a = 0; a < dim; ++a)
    if (!(extent[a] > 0.0)) throw ConfigError("domain: extents must be > 0");
}

InitialCondition::Profile InitialCondition::profile_from_name(const std::string& name) {
  if (name == "zero") return Profile::Zero;
  if (name == "sine") return Profile::Sine;
  if (name == "parabola") return Profile::Parabola;
  if (name == "random") return Profile::Random;
  if (name == "random-positive") return Profile::RandomPositive;
  throw ConfigError("u0: unknown profile '" + name +
                    "' (expected zero|sine|parabola|random|random-positive)");
}

std::string InitialCondition::profile_name() const {
  switch (profile) {
    case Profile::Zero: return "zero";
    case Profile::Sine: return "sine";
    case Profile::Parabola: return "parabola";
    case Profile::Random: return "random";
    case Profile::RandomPositive: return "random-positive";
  }
  return "?";
}

void InitialCondition::validate() const {
  if (!std::isfinite(amplitude)) throw ConfigError("u0: amplitude must be finite");
  if (mode < 1) throw ConfigError("u0: mode must be >= 1");
}

void ProblemSpec::validate() const {
  if (!(p >= 2.0)) throw ConfigError("p must be >= 2");
  if (!(lambda > 0.0)) throw ConfigError("lambda must be > 0");
  if (!(T >= 0.0)) throw ConfigError("T must be >= 0");
  domain.validate();
  source.validate();
  u0.validate();
}

double compute_k0(double p, double alpha, int N) {
  if (!(p >= 2.0)) throw ConfigError("compute_k0: p must be >= 2");
  if (!(alpha > 0.0)) throw ConfigError("compute_k0: alpha must be > 0");
  if (N < 1) throw ConfigError("compute_k0: N must be >= 1");
  return std::max(0.0, static_cast<double>(N) * (alpha + 2.0 - p) / p - 2.0);
}

double compute_d0(double k0, double p, double alpha, double c7) {
  if (!(c7 > 0.0)) throw ConfigError("compute_d0: c7 must be > 0");
  if (!(p >= 2.0)) throw ConfigError("compute_d0: p must be >= 2");
  if (!(alpha > 0.0)) throw ConfigError("compute_d0: alpha must be > 0");
  if (!(k0 >= 0.0)) throw ConfigError("compute_d0: k0 must be >= 0");
  const double denom = c7 * std::pow(k0 + p, p);
  const double d0 = std::pow(4.0 / denom, 1.0 / alpha);
  if (!std::isfinite(denom) || !std::isfinite(d0) || d0 <= 0.0)
    throw RangeError("compute_d0: (k0+p)^p left the representable range");
  return d0;
}

Thresholds make_thresholds(const ProblemSpec& spec, double c7) {
  Thresholds th;
  th.c7_estimate = c7;
  th.k0 = compute_k0(spec.p, spec.source.alpha, spec.domain.dim);
  th.d0 = compute_d0(th.k0, spec.p, spec.source.alpha, c7);
  return th;
}

}  // namespace nlpl
