#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlpl/grid.hpp"
#include "nlpl/problem.hpp"
#include "nlpl/stepping.hpp"
#include "nlpl/trajectory.hpp"

namespace nlpl {

// Outcome of one theorem-level probe. Measured constants (sups, fitted rates,
// radii) are reported quantities; they are never compared against the paper's
// non-constructive constants. Failing reports carry at least one witness.
struct ProbeReport {
  std::string kind;
  bool pass = false;
  std::map<std::string, double> measured;
  struct Witness {
    std::string what;
    double t = 0.0;
    double value = 0.0;
  };
  std::vector<Witness> witnesses;
  std::vector<std::string> evidence;  // one line per examined case
};

// Checks sup_{t >= tau} of the L^(k0+2) and L^inf norms on a completed record,
// and that the sups do not grow (beyond growth_tol, relative) when the horizon
// doubles. Reports the measured sups as empirical c3(tau), c4(tau).
ProbeReport boundedness_probe(const TrajectoryRecord& record,
                              const TrajectoryRecord& doubled_record, double tau,
                              double growth_tol = 0.05);

// Scales the template's initial profile so ||u0||_{k0+2} sweeps the given
// amplitudes across d0 = compute_d0(k0, p, alpha, c7); runs each and reports
// completed-vs-blew-up plus the smallest diverging amplitude. Asserts only
// the theorem's one-sided claim: every amplitude strictly below d0 completes
// with bounded norms. Behavior above d0 is reported, not asserted.
ProbeReport threshold_probe(const ProblemSpec& spec_template, double c7,
                            const std::vector<double>& amplitudes, const Grid& grid,
                            const StepperConfig& cfg, int samples_per_run = 33);

// Evolves two initial fields under the same spec and fits the Gronwall rate
// C = max_t log(||w(t)||_2 / ||w(0)||_2) / t for w = u_a - u_b. With equal
// inputs the trajectories must be bitwise identical.
ProbeReport contraction_probe(const ProblemSpec& spec, const GridField& u0_a,
                              const GridField& u0_b, double t_end,
                              const StepperConfig& cfg, int samples = 41);

// Evolves a family (>= 5) of bounded initial conditions to t_end and to
// 2 t_end; asserts a common W^{1,p} radius R bounds every member for
// t >= tau and that R moves less than growth_tol when the horizon doubles.
// Reports the empirical absorbing radius (the paper's c21(tau) analogue).
ProbeReport absorbing_probe(const ProblemSpec& spec_template,
                            const std::vector<InitialCondition>& family, double tau,
                            double t_end, const Grid& grid, const StepperConfig& cfg,
                            double growth_tol = 0.05);

}  // namespace nlpl
