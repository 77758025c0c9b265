#include "nlpl/spectral.hpp"

#include <cmath>
#include <string>

#include "nlpl/errors.hpp"
#include "nlpl/operators.hpp"

namespace nlpl {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 5-point Gauss-Legendre rule on [-1, 1].
constexpr double kGlNode[5] = {-0.9061798459386639928, -0.5384693101056830910, 0.0,
                               0.5384693101056830910, 0.9061798459386639928};
constexpr double kGlWeight[5] = {0.2369268850561890875, 0.4786286704993664831,
                                 0.5688888888888888889, 0.4786286704993664831,
                                 0.2369268850561890875};

double profile_value(const InitialCondition& ic, double x, double L) {
  switch (ic.profile) {
    case InitialCondition::Profile::Zero:
      return 0.0;
    case InitialCondition::Profile::Sine:
      return ic.amplitude * std::sin(ic.mode * kPi * x / L);
    case InitialCondition::Profile::Parabola:
      return ic.amplitude * 4.0 * x * (L - x) / (L * L);
    default:
      throw ConfigError("spectral: profile '" + ic.profile_name() +
                        "' is grid-only; use zero|sine|parabola");
  }
}

}  // namespace

double SpectralState::evaluate(double x) const {
  double s = 0.0;
  for (int j = 1; j <= m; ++j)
    s += g[static_cast<std::size_t>(j - 1)] * std::sqrt(2.0) * std::sin(j * kPi * x / L);
  return s;
}

double SpectralState::evaluate_derivative(double x) const {
  double s = 0.0;
  for (int j = 1; j <= m; ++j)
    s += g[static_cast<std::size_t>(j - 1)] * std::sqrt(2.0) * (j * kPi / L) *
         std::cos(j * kPi * x / L);
  return s;
}

SineBasis::SineBasis(int m, double L, int cells) : m_(m), L_(L), cells_(cells) {
  if (m < 1) throw ConfigError("spectral: mode count must be >= 1");
  if (!(L > 0.0)) throw ConfigError("spectral: domain length must be > 0");
  if (cells_ == 0) cells_ = auto_cells(m);
  if (cells_ < 2 * m)
    throw ConfigError("spectral: quadrature mesh too coarse for m=" +
                      std::to_string(m) + " (need >= " + std::to_string(2 * m) +
                      " cells, got " + std::to_string(cells_) + ")");

  const std::size_t q = static_cast<std::size_t>(cells_) * 5;
  x_.resize(q);
  w_.resize(q);
  const double hc = L / cells_;
  for (int c = 0; c < cells_; ++c) {
    const double a = c * hc;
    for (int k = 0; k < 5; ++k) {
      const std::size_t at = static_cast<std::size_t>(c) * 5 + k;
      x_[at] = a + 0.5 * hc * (1.0 + kGlNode[k]);
      w_[at] = 0.5 * hc * kGlWeight[k];
    }
  }

  W_.resize(static_cast<std::size_t>(m) * q);
  dW_.resize(static_cast<std::size_t>(m) * q);
  for (int j = 1; j <= m; ++j)
    for (std::size_t a = 0; a < q; ++a) {
      W_[idx(j - 1, a)] = std::sqrt(2.0) * std::sin(j * kPi * x_[a] / L);
      dW_[idx(j - 1, a)] =
          std::sqrt(2.0) * (j * kPi / L) * std::cos(j * kPi * x_[a] / L);
    }
}

void SineBasis::tabulate(const std::vector<double>& g, std::vector<double>& u,
                         std::vector<double>& du) const {
  const std::size_t q = x_.size();
  u.assign(q, 0.0);
  du.assign(q, 0.0);
  for (int j = 0; j < m_; ++j) {
    const double gj = g[static_cast<std::size_t>(j)];
    if (gj == 0.0) continue;
    for (std::size_t a = 0; a < q; ++a) {
      u[a] += gj * W_[idx(j, a)];
      du[a] += gj * dW_[idx(j, a)];
    }
  }
}

std::vector<double> SineBasis::project(const InitialCondition& ic,
                                       double amplitude_scale) const {
  std::vector<double> g(static_cast<std::size_t>(m_), 0.0);
  for (int j = 0; j < m_; ++j) {
    double s = 0.0;
    for (std::size_t a = 0; a < x_.size(); ++a)
      s += w_[a] * profile_value(ic, x_[a], L_) * W_[idx(j, a)];
    g[static_cast<std::size_t>(j)] = amplitude_scale * s / L_;  // ||w_j||^2 = L
  }
  return g;
}

std::vector<double> galerkin_rhs(const SpectralState& state, const ProblemSpec& spec,
                                 const SineBasis& basis) {
  if (spec.domain.dim != 1)
    throw ConfigError("galerkin_rhs: the spectral solver is 1D only");
  if (!(spec.p >= 2.0)) throw ConfigError("galerkin_rhs: p must be >= 2");

  std::vector<double> u, du;
  basis.tabulate(state.g, u, du);
  const std::size_t q = u.size();
  const auto& w = basis.weights();

  std::vector<double> flux(q), fu(q);
  double integral_f = 0.0;
  for (std::size_t a = 0; a < q; ++a) {
    flux[a] = pflux(du[a], spec.p);
    fu[a] = spec.source(u[a]);
    if (!std::isfinite(fu[a]))
      throw EvaluationError("galerkin_rhs: f non-finite", u[a]);
    integral_f += w[a] * fu[a];
  }
  const double floor = 0.5 * spec.source.sigma * basis.length();
  if (!(integral_f >= floor))
    throw DegeneracyError("galerkin_rhs: int f(u_m) below floor", integral_f, floor);

  const double prefactor = spec.lambda / (integral_f * integral_f);
  std::vector<double> rhs(static_cast<std::size_t>(state.m));
  for (int j = 0; j < state.m; ++j) {
    double energy = 0.0, load = 0.0;
    for (std::size_t a = 0; a < q; ++a) {
      energy += w[a] * flux[a] * basis.basis_deriv_at(j, a);
      load += w[a] * fu[a] * basis.basis_at(j, a);
    }
    rhs[static_cast<std::size_t>(j)] = (-energy + prefactor * load) / state.L;
  }
  return rhs;
}

namespace {

TrajectorySample spectral_sample(const SpectralState& state, const ProblemSpec& spec,
                                 const SineBasis& basis, double t, double k0) {
  std::vector<double> u, du;
  basis.tabulate(state.g, u, du);
  const auto& w = basis.weights();

  TrajectorySample s;
  s.t = t;
  double sk = 0.0, s2 = 0.0, sinf = 0.0, sp = 0.0, fint = 0.0, fmax = 0.0;
  for (std::size_t a = 0; a < u.size(); ++a) {
    const double au = std::abs(u[a]);
    sk += w[a] * std::pow(au, k0 + 2.0);
    s2 += w[a] * u[a] * u[a];
    sinf = std::max(sinf, au);
    sp += w[a] * std::pow(std::abs(du[a]), spec.p);
    const double f = spec.source(u[a]);
    fint += w[a] * f;
    fmax = std::max(fmax, std::abs(f));
  }
  s.norm_k0p2 = std::pow(sk, 1.0 / (k0 + 2.0));
  s.norm_2 = std::sqrt(s2);
  s.norm_inf = sinf;
  s.w1p = std::pow(sp, 1.0 / spec.p);
  s.int_f = fint;
  s.source_inf = spec.lambda / (fint * fint) * fmax;
  return s;
}

bool finite_state(const SpectralState& st, double cap) {
  double m = 0.0;
  for (double v : st.g) {
    if (!std::isfinite(v)) return false;
    m = std::max(m, std::abs(v));
  }
  return m <= cap;
}

}  // namespace

TrajectoryRecord galerkin_run(const ProblemSpec& spec, int m, const StepperConfig& cfg,
                              const std::vector<double>& sample_times,
                              std::vector<SpectralState>* states_out) {
  spec.validate();
  cfg.validate();
  if (spec.domain.dim != 1)
    throw ConfigError("galerkin_run: the spectral solver is 1D only");
  if (sample_times.empty())
    throw ConfigError("galerkin_run: need at least one sample time");

  const SineBasis basis(m, spec.domain.extent[0], cfg.quad_cells);
  SpectralState state;
  state.m = m;
  state.L = spec.domain.extent[0];
  state.g = basis.project(spec.u0);

  TrajectoryRecord rec;
  rec.k0 = compute_k0(spec.p, spec.source.alpha, 1);
  rec.gamma_exponent = rec.k0 / spec.p;

  auto rhs_of = [&](const SpectralState& st) { return galerkin_rhs(st, spec, basis); };

  double t = 0.0;
  long step = 0;
  try {
    for (std::size_t si = 0; si < sample_times.size(); ++si) {
      const double target = sample_times[si];
      const double span = target - t;
      if (span > 0.0) {
        const long nsub = std::max(1L, static_cast<long>(std::ceil(span / cfg.dt_initial)));
        const double dt = span / static_cast<double>(nsub);
        for (long k = 0; k < nsub; ++k) {
          if (step >= cfg.max_steps) {
            rec.status = RunStatus::StepLimit;
            rec.blowup_time = t;
            rec.blowup_step = step;
            return rec;
          }
          // classical RK4
          const std::vector<double> k1 = rhs_of(state);
          SpectralState s2 = state;
          for (std::size_t i = 0; i < s2.g.size(); ++i) s2.g[i] += 0.5 * dt * k1[i];
          const std::vector<double> k2 = rhs_of(s2);
          SpectralState s3 = state;
          for (std::size_t i = 0; i < s3.g.size(); ++i) s3.g[i] += 0.5 * dt * k2[i];
          const std::vector<double> k3 = rhs_of(s3);
          SpectralState s4 = state;
          for (std::size_t i = 0; i < s4.g.size(); ++i) s4.g[i] += dt * k3[i];
          const std::vector<double> k4 = rhs_of(s4);
          for (std::size_t i = 0; i < state.g.size(); ++i)
            state.g[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
          t += dt;
          ++step;
          if (!finite_state(state, cfg.blowup_threshold))
            throw BlowUpError("galerkin_run: coefficients diverged", step, t);
        }
        t = target;  // kill accumulated roundoff at the sample point
      }
      rec.samples.push_back(spectral_sample(state, spec, basis, target, rec.k0));
      if (states_out) states_out->push_back(state);
    }
  } catch (const BlowUpError& e) {
    rec.status = RunStatus::BlewUp;
    rec.blowup_time = e.time;
    rec.blowup_step = e.step;
  }
  rec.steps_taken = step;
  return rec;
}

GridField spectral_to_grid(const SpectralState& state, const Grid& grid) {
  if (grid.dim != 1) throw ConfigError("spectral_to_grid: 1D grids only");
  GridField out(grid);
  for (int i = 0; i < grid.n[0]; ++i)
    out.values[static_cast<std::size_t>(i)] = state.evaluate(grid.coord(0, i));
  return out;
}

}  // namespace nlpl
