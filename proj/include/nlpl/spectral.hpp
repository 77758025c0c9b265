#pragma once

#include <vector>

#include "nlpl/grid.hpp"
#include "nlpl/problem.hpp"
#include "nlpl/stepping.hpp"
#include "nlpl/trajectory.hpp"

namespace nlpl {

// Galerkin coefficients g_j(t) of u_m = sum_j g_j w_j over the Dirichlet sine
// basis w_j(x) = sqrt(2) sin(j pi x / L) on (0, L).
struct SpectralState {
  int m = 1;
  double L = 1.0;
  std::vector<double> g;

  double evaluate(double x) const;
  double evaluate_derivative(double x) const;
};

// Composite Gauss-Legendre quadrature (5 points per cell) on (0, L) with the
// basis tabulated at the quadrature nodes. The evaluation mesh must resolve
// the highest mode: cells >= 2m, else ConfigError.
class SineBasis {
 public:
  SineBasis(int m, double L, int cells);

  int modes() const { return m_; }
  double length() const { return L_; }
  int cells() const { return cells_; }
  const std::vector<double>& nodes() const { return x_; }
  const std::vector<double>& weights() const { return w_; }

  // u and u' at the quadrature nodes for coefficients g.
  void tabulate(const std::vector<double>& g, std::vector<double>& u,
                std::vector<double>& du) const;
  double basis_at(int j, std::size_t a) const { return W_[idx(j, a)]; }
  double basis_deriv_at(int j, std::size_t a) const { return dW_[idx(j, a)]; }

  // L2 projection coefficients of a continuous profile (coincides with the
  // H_0^1-orthogonal projection for this basis).
  std::vector<double> project(const InitialCondition& ic, double amplitude_scale = 1.0) const;

  static int auto_cells(int m) { return std::max(32, 8 * m); }

 private:
  std::size_t idx(int j, std::size_t a) const {
    return static_cast<std::size_t>(j) * x_.size() + a;
  }
  int m_;
  double L_;
  int cells_;
  std::vector<double> x_, w_;
  std::vector<double> W_, dW_;
};

// Right side of the Galerkin system: for j = 1..m,
//   dg_j/dt = ( -int |u'|^(p-2) u' w_j' + lambda/(int f(u))^2 int f(u) w_j ) / ||w_j||^2
// with ||w_j||^2 = L. The middle pairing of the system is read as the
// p-Laplacian energy form, which is the weak form of the PDE.
std::vector<double> galerkin_rhs(const SpectralState& state, const ProblemSpec& spec,
                                 const SineBasis& basis);

// Projects u0 onto the first m modes and integrates with fixed-step RK4
// (cfg.dt_initial), recording norms at the sample times. Norms are quadrature
// norms on the evaluation mesh. Optionally collects the state at every sample.
TrajectoryRecord galerkin_run(const ProblemSpec& spec, int m, const StepperConfig& cfg,
                              const std::vector<double>& sample_times,
                              std::vector<SpectralState>* states_out = nullptr);

// Samples u_m at the interior nodes of a grid (cross-scheme comparisons).
GridField spectral_to_grid(const SpectralState& state, const Grid& grid);

}  // namespace nlpl
