#include "nlpl/trajectory.hpp"

#include <cmath>

#include "nlpl/errors.hpp"

namespace nlpl {

std::string status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Completed: return "completed";
    case RunStatus::BlewUp: return "blew-up";
    case RunStatus::StepLimit: return "step-limit";
  }
  return "?";
}

std::vector<double> TrajectoryRecord::times() const {
  std::vector<double> t;
  t.reserve(samples.size());
  for (const auto& s : samples) t.push_back(s.t);
  return t;
}

void TrajectoryRecord::check_invariants() const {
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (!(samples[i].t > samples[i - 1].t))
      throw Error("trajectory: sample times not strictly ascending");
  if (status == RunStatus::Completed) {
    for (const auto& s : samples) {
      const bool finite = std::isfinite(s.norm_k0p2) && std::isfinite(s.norm_2) &&
                          std::isfinite(s.norm_inf) && std::isfinite(s.w1p) &&
                          std::isfinite(s.int_f);
      if (!finite) throw Error("trajectory: completed run carries non-finite norms");
    }
  }
}

}  // namespace nlpl
