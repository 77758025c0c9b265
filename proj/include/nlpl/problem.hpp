#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "nlpl/source_function.hpp"

namespace nlpl {

// Rectangular domain (0,Lx) or (0,Lx)x(0,Ly).
struct DomainSpec {
  int dim = 1;
  std::array<double, 2> extent{1.0, 1.0};

  double measure() const { return dim == 1 ? extent[0] : extent[0] * extent[1]; }
  void validate() const;
};

// Named initial profile, evaluated onto grids or projected onto sine modes.
// All profiles vanish on the boundary.
struct InitialCondition {
  enum class Profile { Zero, Sine, Parabola, Random, RandomPositive };
  Profile profile = Profile::Zero;
  double amplitude = 0.0;
  int mode = 1;            // Sine: amplitude * prod_axis sin(mode*pi*x/L)
  std::uint64_t seed = 1;  // Random profiles

  static Profile profile_from_name(const std::string& name);
  std::string profile_name() const;
  void validate() const;
};

// The continuous problem: u_t - div(|grad u|^(p-2) grad u) =
// lambda f(u) / (int_Omega f(u) dx)^2, homogeneous Dirichlet data, u(0)=u0.
struct ProblemSpec {
  double p = 2.0;
  double lambda = 1.0;
  DomainSpec domain;
  SourceFunction source;
  InitialCondition u0;
  double T = 1.0;

  void validate() const;
};

// Theorem-level scalar thresholds.
//   k0 >= max(0, N(alpha+2-p)/p - 2)
//   d0  = (4 / (c7 (k0+p)^p))^(1/alpha)
// c7 stands in for an embedding constant the analysis does not compute; it is
// an experiment knob (default 1), so d0 is configurable, not certified.
struct Thresholds {
  double k0 = 0.0;
  double d0 = 1.0;
  double c7_estimate = 1.0;
};

// Minimal admissible k0 for given p-Laplacian exponent, growth alpha and
// dimension N.
double compute_k0(double p, double alpha, int N);

// Smallness threshold on ||u0||_{k0+2}; throws RangeError if (k0+p)^p leaves
// the representable range. Strictly decreasing in c7 and in k0.
double compute_d0(double k0, double p, double alpha, double c7);

Thresholds make_thresholds(const ProblemSpec& spec, double c7);

}  // namespace nlpl
