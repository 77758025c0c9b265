#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlpl/grid.hpp"

namespace nlpl {

// Norms and diagnostics recorded at one sample time.
struct TrajectorySample {
  double t = 0.0;
  double norm_k0p2 = 0.0;   // L^(k0+2)
  double norm_2 = 0.0;      // L^2
  double norm_inf = 0.0;    // max |u|
  double w1p = 0.0;         // W^{1,p} seminorm
  double int_f = 0.0;       // int f(u)
  double source_inf = 0.0;  // max of the nonlocal source term
  std::map<double, double> extra_norms;  // per requested exponent k
};

enum class RunStatus { Completed, BlewUp, StepLimit };

std::string status_name(RunStatus s);

// Time series of norms and diagnostics for post-hoc verification. tau-based
// probes read sups over [tau, T] from `samples`; gamma_exponent = k0/p tags
// the |u|^gamma u quantity the estimates control.
struct TrajectoryRecord {
  std::vector<TrajectorySample> samples;
  double k0 = 0.0;
  double gamma_exponent = 0.0;
  RunStatus status = RunStatus::Completed;
  double blowup_time = 0.0;  // valid when status != Completed
  long blowup_step = -1;
  long steps_taken = 0;

  Grid grid;  // grid of the snapshots (when any)
  std::vector<std::pair<double, std::vector<double>>> snapshots;

  bool completed() const { return status == RunStatus::Completed; }
  std::vector<double> times() const;
  void check_invariants() const;  // ascending times; finite norms when completed
};

}  // namespace nlpl
