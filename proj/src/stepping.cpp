#include "nlpl/stepping.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>

#include "nlpl/errors.hpp"
#include "nlpl/nonlocal.hpp"
#include "nlpl/operators.hpp"

namespace nlpl {

Scheme scheme_from_name(const std::string& name) {
  if (name == "explicit-euler") return Scheme::ExplicitEuler;
  if (name == "imex") return Scheme::Imex;
  if (name == "rk4-spectral") return Scheme::Rk4Spectral;
  throw ConfigError("stepper: unknown scheme '" + name +
                    "' (expected explicit-euler|imex|rk4-spectral)");
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::ExplicitEuler: return "explicit-euler";
    case Scheme::Imex: return "imex";
    case Scheme::Rk4Spectral: return "rk4-spectral";
  }
  return "?";
}

void StepperConfig::validate() const {
  if (!(dt_initial > 0.0)) throw ConfigError("stepper: dt_initial must be > 0");
  if (!(dt_safety > 0.0 && dt_safety <= 1.0))
    throw ConfigError("stepper: dt_safety must be in (0, 1]");
  if (max_steps < 1) throw ConfigError("stepper: max_steps must be >= 1");
  if (!(newton_tol > 0.0)) throw ConfigError("stepper: newton_tol must be > 0");
  if (newton_max_iter < 1) throw ConfigError("stepper: newton_max_iter must be >= 1");
  if (!(epsilon >= 0.0)) throw ConfigError("stepper: epsilon must be >= 0");
  if (!(blowup_threshold > 0.0)) throw ConfigError("stepper: blowup_threshold must be > 0");
  if (quad_cells < 0) throw ConfigError("stepper: quad_cells must be >= 0");
}

namespace {

double max_face_gradient(const GridField& u) {
  const Grid& g = u.grid;
  double m = 0.0;
  if (g.dim == 1) {
    const int n = g.n[0];
    for (int f = 0; f <= n; ++f) {
      const double ul = f > 0 ? u.values[f - 1] : 0.0;
      const double ur = f < n ? u.values[f] : 0.0;
      m = std::max(m, std::abs((ur - ul) / g.h[0]));
    }
    return m;
  }
  const int nx = g.n[0], ny = g.n[1];
  for (int j = 0; j < ny; ++j)
    for (int f = 0; f <= nx; ++f) {
      const double ul = f > 0 ? u.values[g.index(f - 1, j)] : 0.0;
      const double ur = f < nx ? u.values[g.index(f, j)] : 0.0;
      m = std::max(m, std::abs((ur - ul) / g.h[0]));
    }
  for (int i = 0; i < nx; ++i)
    for (int f = 0; f <= ny; ++f) {
      const double ul = f > 0 ? u.values[g.index(i, f - 1)] : 0.0;
      const double ur = f < ny ? u.values[g.index(i, f)] : 0.0;
      m = std::max(m, std::abs((ur - ul) / g.h[1]));
    }
  return m;
}

void check_finite_or_blowup(const GridField& u, const StepperConfig& cfg, long step,
                            double t) {
  double m = 0.0;
  for (double v : u.values) {
    if (!std::isfinite(v))
      throw BlowUpError("trajectory diverged (non-finite value)", step, t);
    m = std::max(m, std::abs(v));
  }
  if (m > cfg.blowup_threshold)
    throw BlowUpError("trajectory diverged (norm cap crossed)", step, t);
}

// Jacobian of v - dt A_p v at v, as a sparse matrix in the grid ordering.
Eigen::SparseMatrix<double> imex_jacobian(const GridField& v, double p, double eps,
                                          double dt) {
  const Grid& g = v.grid;
  const auto n_total = static_cast<Eigen::Index>(g.size());
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(g.size() * 5);

  auto add_axis = [&](int axis, auto left_of, auto right_of, auto valid) {
    const double h = g.h[axis];
    const double w = dt / (h * h);
    for (std::size_t c = 0; c < g.size(); ++c) {
      const auto l = left_of(c);
      const auto r = right_of(c);
      const double uc = v.values[c];
      const double ul = valid(l) ? v.values[l] : 0.0;
      const double ur = valid(r) ? v.values[r] : 0.0;
      const double dr = pflux_deriv((ur - uc) / h, p, eps);
      const double dl = pflux_deriv((uc - ul) / h, p, eps);
      trip.emplace_back(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c),
                        w * (dr + dl));
      if (valid(r))
        trip.emplace_back(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r),
                          -w * dr);
      if (valid(l))
        trip.emplace_back(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(l),
                          -w * dl);
    }
  };

  if (g.dim == 1) {
    const std::size_t n = g.size();
    add_axis(
        0, [](std::size_t c) { return c - 1; }, [](std::size_t c) { return c + 1; },
        [n](std::size_t c) { return c < n; });
  } else {
    const std::size_t nx = static_cast<std::size_t>(g.n[0]);
    const std::size_t n = g.size();
    add_axis(
        0, [nx](std::size_t c) { return c % nx == 0 ? SIZE_MAX : c - 1; },
        [nx](std::size_t c) { return c % nx == nx - 1 ? SIZE_MAX : c + 1; },
        [n](std::size_t c) { return c < n; });
    add_axis(
        1, [nx](std::size_t c) { return c < nx ? SIZE_MAX : c - nx; },
        [nx](std::size_t c) { return c + nx; },
        [n](std::size_t c) { return c < n; });
  }

  for (std::size_t c = 0; c < g.size(); ++c)
    trip.emplace_back(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c), 1.0);

  Eigen::SparseMatrix<double> J(n_total, n_total);
  J.setFromTriplets(trip.begin(), trip.end());
  return J;
}

}  // namespace

double stable_dt(const GridField& field, const ProblemSpec& spec,
                 const StepperConfig& cfg) {
  const Grid& g = field.grid;
  const double hmin = g.dim == 1 ? g.h[0] : std::min(g.h[0], g.h[1]);
  const double dmax = max_face_gradient(field);
  const double coeff = std::max(1.0, std::pow(dmax, spec.p - 2.0));
  return cfg.dt_safety * hmin * hmin / (2.0 * g.dim * coeff);
}

GridField step_explicit(const GridField& field, const ProblemSpec& spec, double dt,
                        const StepperConfig& cfg) {
  const GridField a = p_laplacian_apply(field, spec.p, cfg.epsilon);
  const std::vector<double> s = nonlocal_source(field, spec.source, spec.lambda);
  GridField out(field.grid);
  for (std::size_t i = 0; i < out.size(); ++i)
    out.values[i] = field.values[i] + dt * (a.values[i] + s[i]);
  check_finite_or_blowup(out, cfg, -1, 0.0);
  return out;
}

GridField step_imex(const GridField& field, const ProblemSpec& spec, double dt,
                    const StepperConfig& cfg) {
  const std::vector<double> s = nonlocal_source(field, spec.source, spec.lambda);
  const auto n = static_cast<Eigen::Index>(field.size());
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i)
    rhs[i] = field.values[static_cast<std::size_t>(i)] +
             dt * s[static_cast<std::size_t>(i)];

  GridField v = field;  // Newton iterate
  const double tol = cfg.newton_tol * std::max(1.0, rhs.lpNorm<Eigen::Infinity>());

  auto residual = [&](const GridField& w) {
    const GridField aw = p_laplacian_apply(w, spec.p, cfg.epsilon);
    Eigen::VectorXd r(n);
    for (Eigen::Index i = 0; i < n; ++i)
      r[i] = w.values[static_cast<std::size_t>(i)] -
             dt * aw.values[static_cast<std::size_t>(i)] - rhs[i];
    return r;
  };

  Eigen::VectorXd r = residual(v);
  double rnorm = r.lpNorm<Eigen::Infinity>();
  for (int it = 0; it < cfg.newton_max_iter && rnorm > tol; ++it) {
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(imex_jacobian(v, spec.p, cfg.epsilon, dt));
    if (lu.info() != Eigen::Success)
      throw SolverError("imex: Jacobian factorization failed", rnorm);
    const Eigen::VectorXd delta = lu.solve(-r);

    double theta = 1.0;
    for (int bt = 0; bt < 40; ++bt) {
      GridField trial = v;
      for (Eigen::Index i = 0; i < n; ++i)
        trial.values[static_cast<std::size_t>(i)] += theta * delta[i];
      const Eigen::VectorXd rt = residual(trial);
      const double rtnorm = rt.lpNorm<Eigen::Infinity>();
      if (rtnorm < rnorm || rtnorm <= tol) {
        v = std::move(trial);
        r = rt;
        rnorm = rtnorm;
        break;
      }
      theta *= 0.5;
      if (bt == 39)
        throw SolverError("imex: Newton line search stalled", rnorm);
    }
  }
  if (rnorm > tol)
    throw SolverError("imex: Newton did not reach tolerance, residual=" +
                          std::to_string(rnorm),
                      rnorm);
  check_finite_or_blowup(v, cfg, -1, 0.0);
  return v;
}

TrajectorySample measure_sample(const GridField& u, const ProblemSpec& spec, double t,
                                double k0, const std::vector<double>& extra_ks) {
  TrajectorySample s;
  s.t = t;
  s.norm_k0p2 = lp_norm(u, k0 + 2.0);
  s.norm_2 = lp_norm(u, 2.0);
  s.norm_inf = lp_norm(u, kInfNorm);
  s.w1p = w1p_seminorm(u, spec.p);
  std::vector<double> f(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) f[i] = spec.source(u.values[i]);
  s.int_f = integrate(f, u.grid);
  const std::vector<double> src = nonlocal_source(u, spec.source, spec.lambda);
  double m = 0.0;
  for (double v : src) m = std::max(m, std::abs(v));
  s.source_inf = m;
  for (double k : extra_ks) s.extra_norms[k] = lp_norm(u, k);
  return s;
}

TrajectoryRecord run_field_to_time(GridField u, const ProblemSpec& spec,
                                   const StepperConfig& cfg,
                                   const std::vector<double>& sample_times,
                                   int snapshot_every,
                                   const std::vector<double>& extra_ks) {
  spec.validate();
  cfg.validate();
  if (sample_times.empty())
    throw ConfigError("run_to_time: need at least one sample time");
  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    if (i > 0 && !(sample_times[i] > sample_times[i - 1]))
      throw ConfigError("run_to_time: sample times must be strictly ascending");
    if (sample_times[i] < 0.0 || sample_times[i] > spec.T + 1e-12 * std::max(1.0, spec.T))
      throw ConfigError("run_to_time: sample times must lie in [0, T]");
  }
  if (cfg.scheme == Scheme::Rk4Spectral)
    throw ConfigError("run_to_time: rk4-spectral drives the Galerkin solver, not grids");

  TrajectoryRecord rec;
  rec.k0 = compute_k0(spec.p, spec.source.alpha, u.grid.dim);
  rec.gamma_exponent = rec.k0 / spec.p;
  rec.grid = u.grid;

  double t = 0.0;
  long step = 0;
  std::size_t next_sample = 0;
  int samples_done = 0;

  auto record_now = [&]() {
    rec.samples.push_back(measure_sample(u, spec, t, rec.k0, extra_ks));
    if (snapshot_every > 0 && samples_done % snapshot_every == 0)
      rec.snapshots.emplace_back(t, u.values);
    ++samples_done;
  };

  try {
    while (next_sample < sample_times.size()) {
      const double target = sample_times[next_sample];
      if (t >= target - 1e-14 * std::max(1.0, target)) {
        record_now();
        ++next_sample;
        continue;
      }
      if (step >= cfg.max_steps) {
        rec.status = RunStatus::StepLimit;
        rec.blowup_time = t;
        rec.blowup_step = step;
        return rec;
      }
      double dt = cfg.scheme == Scheme::ExplicitEuler
                      ? std::min(stable_dt(u, spec, cfg), cfg.dt_initial)
                      : cfg.dt_initial;
      dt = std::min(dt, target - t);
      u = cfg.scheme == Scheme::ExplicitEuler ? step_explicit(u, spec, dt, cfg)
                                              : step_imex(u, spec, dt, cfg);
      t += dt;
      ++step;
    }
  } catch (const BlowUpError& e) {
    rec.status = RunStatus::BlewUp;
    rec.blowup_time = e.step >= 0 ? e.time : t;
    rec.blowup_step = e.step >= 0 ? e.step : step;
  }
  rec.steps_taken = step;
  return rec;
}

TrajectoryRecord run_to_time(const ProblemSpec& spec, const Grid& grid,
                             const StepperConfig& cfg,
                             const std::vector<double>& sample_times,
                             int snapshot_every, const std::vector<double>& extra_ks) {
  return run_field_to_time(make_initial_field(spec.u0, grid), spec, cfg, sample_times,
                           snapshot_every, extra_ks);
}

std::vector<double> uniform_times(double T, int count) {
  if (T == 0.0) return {0.0};
  if (count < 2) count = 2;
  std::vector<double> t(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) t[static_cast<std::size_t>(i)] = T * i / (count - 1);
  return t;
}

}  // namespace nlpl
