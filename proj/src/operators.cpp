#include "nlpl/operators.hpp"

#include <cmath>

#include "nlpl/errors.hpp"

namespace nlpl {

double pflux(double d, double p, double eps) {
  if (p == 2.0 && eps == 0.0) return d;
  if (eps == 0.0) return std::pow(std::abs(d), p - 2.0) * d;
  return std::pow(d * d + eps * eps, 0.5 * (p - 2.0)) * d;
}

double pflux_deriv(double d, double p, double eps) {
  if (p == 2.0 && eps == 0.0) return 1.0;
  if (eps == 0.0) return (p - 1.0) * std::pow(std::abs(d), p - 2.0);
  const double s = d * d + eps * eps;
  return std::pow(s, 0.5 * (p - 4.0)) * ((p - 1.0) * d * d + eps * eps);
}

GridField p_laplacian_apply(const GridField& field, double p, double eps) {
  if (!(p >= 2.0)) throw ConfigError("p_laplacian_apply: p must be >= 2");
  const Grid& g = field.grid;
  GridField out(g);

  if (g.dim == 1) {
    const int n = g.n[0];
    const double h = g.h[0];
    for (int i = 0; i < n; ++i) {
      const double ul = i > 0 ? field.values[i - 1] : 0.0;
      const double uc = field.values[i];
      const double ur = i + 1 < n ? field.values[i + 1] : 0.0;
      const double fr = pflux((ur - uc) / h, p, eps);
      const double fl = pflux((uc - ul) / h, p, eps);
      out.values[i] = (fr - fl) / h;
    }
    return out;
  }

  const int nx = g.n[0], ny = g.n[1];
  const double hx = g.h[0], hy = g.h[1];
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t c = g.index(i, j);
      const double uc = field.values[c];
      const double uxl = i > 0 ? field.values[g.index(i - 1, j)] : 0.0;
      const double uxr = i + 1 < nx ? field.values[g.index(i + 1, j)] : 0.0;
      const double uyl = j > 0 ? field.values[g.index(i, j - 1)] : 0.0;
      const double uyr = j + 1 < ny ? field.values[g.index(i, j + 1)] : 0.0;
      const double fx = pflux((uxr - uc) / hx, p, eps) - pflux((uc - uxl) / hx, p, eps);
      const double fy = pflux((uyr - uc) / hy, p, eps) - pflux((uc - uyl) / hy, p, eps);
      out.values[c] = fx / hx + fy / hy;
    }
  }
  return out;
}

double integrate(const std::vector<double>& values, const Grid& grid) {
  double s = 0.0;
  for (double v : values) s += v;
  return grid.cell_measure() * s;
}

double lp_norm(const GridField& field, double k) {
  if (k == kInfNorm) {
    double m = 0.0;
    for (double v : field.values) m = std::max(m, std::abs(v));
    return m;
  }
  if (!(k >= 1.0)) throw ConfigError("lp_norm: k must be >= 1 or the inf sentinel");
  double s = 0.0;
  for (double v : field.values) s += std::pow(std::abs(v), k);
  return std::pow(field.grid.cell_measure() * s, 1.0 / k);
}

double w1p_seminorm(const GridField& field, double p) {
  if (!(p >= 2.0)) throw ConfigError("w1p_seminorm: p must be >= 2");
  const Grid& g = field.grid;
  double s = 0.0;

  if (g.dim == 1) {
    const int n = g.n[0];
    const double h = g.h[0];
    for (int f = 0; f <= n; ++f) {
      const double ul = f > 0 ? field.values[f - 1] : 0.0;
      const double ur = f < n ? field.values[f] : 0.0;
      s += std::pow(std::abs((ur - ul) / h), p);
    }
    return std::pow(g.cell_measure() * s, 1.0 / p);
  }

  const int nx = g.n[0], ny = g.n[1];
  const double hx = g.h[0], hy = g.h[1];
  for (int j = 0; j < ny; ++j)
    for (int f = 0; f <= nx; ++f) {
      const double ul = f > 0 ? field.values[g.index(f - 1, j)] : 0.0;
      const double ur = f < nx ? field.values[g.index(f, j)] : 0.0;
      s += std::pow(std::abs((ur - ul) / hx), p);
    }
  for (int i = 0; i < nx; ++i)
    for (int f = 0; f <= ny; ++f) {
      const double ul = f > 0 ? field.values[g.index(i, f - 1)] : 0.0;
      const double ur = f < ny ? field.values[g.index(i, f)] : 0.0;
      s += std::pow(std::abs((ur - ul) / hy), p);
    }
  return std::pow(g.cell_measure() * s, 1.0 / p);
}

double dot(const GridField& a, const GridField& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * b.values[i];
  return a.grid.cell_measure() * s;
}

}  // namespace nlpl
