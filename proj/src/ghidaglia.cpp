#include "nlpl/ghidaglia.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>
#include <random>

#include "nlpl/errors.hpp"

namespace nlpl {

void GhidagliaParams::validate() const {
  if (!(gamma_g > 0.0)) throw ConfigError("ghidaglia: gamma must be > 0");
  if (!(nu > 1.0)) throw ConfigError("ghidaglia: nu must be > 1");
  if (!(delta >= 0.0)) throw ConfigError("ghidaglia: delta must be >= 0");
}

double ghidaglia_bound(double t, const GhidagliaParams& params) {
  params.validate();
  if (t < 0.0) throw ConfigError("ghidaglia_bound: t must be >= 0");
  const double forced = std::pow(params.delta / params.gamma_g, 1.0 / params.nu);
  if (t == 0.0) return std::numeric_limits<double>::infinity();
  const double decay =
      std::pow(params.gamma_g * (params.nu - 1.0) * t, -1.0 / (params.nu - 1.0));
  return forced + decay;
}

GhidagliaProbeReport verify_ghidaglia(const GhidagliaParams& params, double y0,
                                      double t_end, int sample_count) {
  params.validate();
  if (!(y0 > 0.0)) throw ConfigError("verify_ghidaglia: y0 must be > 0");
  if (!(t_end > 0.0)) throw ConfigError("verify_ghidaglia: t_end must be > 0");
  if (sample_count < 100) sample_count = 100;

  // Geometric sample times spanning four decades below t_end.
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(sample_count));
  const double t0 = t_end * 1e-4;
  for (int i = 0; i < sample_count; ++i)
    times.push_back(t0 * std::pow(t_end / t0,
                                  static_cast<double>(i) / (sample_count - 1)));

  using state_type = std::array<double, 1>;
  auto rhs = [&](const state_type& y, state_type& dydt, double) {
    const double yc = std::max(y[0], 0.0);  // y stays nonnegative; guard pow
    dydt[0] = params.delta - params.gamma_g * std::pow(yc, params.nu);
  };

  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<state_type>>(
      1e-12, 1e-10);

  GhidagliaProbeReport rep;
  rep.samples = sample_count;
  rep.worst_margin = -std::numeric_limits<double>::infinity();

  state_type y{y0};
  double t = 0.0;
  for (double ts : times) {
    try {
      odeint::integrate_adaptive(stepper, rhs, y, t, ts, (ts - t) / 64.0);
    } catch (const std::exception& e) {
      throw Error(std::string("verify_ghidaglia: integrator failure: ") + e.what());
    }
    t = ts;
    const double bound = ghidaglia_bound(ts, params);
    const double margin = y[0] / bound - 1.0;
    if (margin > rep.worst_margin) {
      rep.worst_margin = margin;
      rep.worst_time = ts;
    }
  }
  rep.pass = rep.worst_margin <= 1e-6;
  return rep;
}

GhidagliaSuiteReport ghidaglia_suite(int draws, std::uint64_t seed, double t_end) {
  GhidagliaSuiteReport suite;
  suite.draws = draws;
  suite.worst_margin = -std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int d = 0; d < draws; ++d) {
    GhidagliaParams p;
    p.gamma_g = 0.1 + 9.9 * u01(rng);
    p.nu = std::nextafter(1.0, 2.0) + 2.0 * u01(rng);  // (1, 3]
    p.delta = 10.0 * u01(rng);
    const double y0 = std::nextafter(0.0, 1.0) + 100.0 * u01(rng);
    suite.runs.push_back(verify_ghidaglia(p, y0, t_end));
    suite.worst_margin = std::max(suite.worst_margin, suite.runs.back().worst_margin);
  }
  suite.pass = true;
  for (const auto& r : suite.runs) suite.pass = suite.pass && r.pass;
  return suite;
}

}  // namespace nlpl
