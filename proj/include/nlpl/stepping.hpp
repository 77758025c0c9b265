#pragma once

#include <string>
#include <vector>

#include "nlpl/grid.hpp"
#include "nlpl/problem.hpp"
#include "nlpl/trajectory.hpp"

namespace nlpl {

enum class Scheme { ExplicitEuler, Imex, Rk4Spectral };

Scheme scheme_from_name(const std::string& name);
std::string scheme_name(Scheme s);

struct StepperConfig {
  Scheme scheme = Scheme::ExplicitEuler;
  double dt_initial = 1e-3;
  double dt_safety = 0.8;        // in (0, 1]
  long max_steps = 50'000'000;
  double newton_tol = 1e-10;
  int newton_max_iter = 25;
  double epsilon = 0.0;          // opt-in gradient regularization for stiff solves
  double blowup_threshold = 1e8; // ||u||_inf cap defining operational blow-up
  int quad_cells = 0;            // spectral quadrature cells (0 = auto)

  void validate() const;
};

// Largest explicit step admitted by the local linearization guard
//   dt <= safety * h_min^2 / (2 N max(1, max_faces |du/dx|^(p-2))).
double stable_dt(const GridField& field, const ProblemSpec& spec,
                 const StepperConfig& cfg);

// Forward Euler: u + dt (A_p u + S(u)). Throws BlowUpError on non-finite
// output or when ||u||_inf crosses cfg.blowup_threshold.
GridField step_explicit(const GridField& field, const ProblemSpec& spec, double dt,
                        const StepperConfig& cfg);

// Backward Euler in the diffusion, explicit in the source:
//   v - dt A_p v = u + dt S(u),
// solved by damped Newton (one linear solve when p = 2). Throws SolverError
// if Newton fails, BlowUpError as above.
GridField step_imex(const GridField& field, const ProblemSpec& spec, double dt,
                    const StepperConfig& cfg);

// Norm/diagnostic row for the current field.
TrajectorySample measure_sample(const GridField& u, const ProblemSpec& spec,
                                double t, double k0,
                                const std::vector<double>& extra_ks = {});

// Drives the configured stepper from the spec's initial profile and records
// at every sample time (ascending, within [0, T]). Blow-up is recorded as a
// terminal status with the divergence time, not rethrown.
// snapshot_every = s stores the field at every s-th sample (0 = never).
TrajectoryRecord run_to_time(const ProblemSpec& spec, const Grid& grid,
                             const StepperConfig& cfg,
                             const std::vector<double>& sample_times,
                             int snapshot_every = 0,
                             const std::vector<double>& extra_ks = {});

// Same, but starting from an explicit field (probes scale initial data).
TrajectoryRecord run_field_to_time(GridField u, const ProblemSpec& spec,
                                   const StepperConfig& cfg,
                                   const std::vector<double>& sample_times,
                                   int snapshot_every = 0,
                                   const std::vector<double>& extra_ks = {});

// Uniform sample times 0..T (count >= 2 unless T == 0).
std::vector<double> uniform_times(double T, int count);

}  // namespace nlpl
