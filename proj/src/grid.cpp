#include "nlpl/grid.hpp"

#include <cmath>
#include <random>

#include "nlpl/errors.hpp"

namespace nlpl {

Grid Grid::make_1d(int n, double extent) {
  if (n < 1) throw ConfigError("grid: need at least one interior node");
  if (!(extent > 0.0)) throw ConfigError("grid: extent must be > 0");
  Grid g;
  g.dim = 1;
  g.n = {n, 1};
  g.extent = {extent, 1.0};
  g.h = {extent / (n + 1), 1.0};
  return g;
}

Grid Grid::make_2d(int nx, int ny, double ex, double ey) {
  if (nx < 1 || ny < 1) throw ConfigError("grid: need at least one interior node per axis");
  if (!(ex > 0.0 && ey > 0.0)) throw ConfigError("grid: extents must be > 0");
  Grid g;
  g.dim = 2;
  g.n = {nx, ny};
  g.extent = {ex, ey};
  g.h = {ex / (nx + 1), ey / (ny + 1)};
  return g;
}

Grid Grid::from_domain(const DomainSpec& domain, int points_per_axis) {
  if (domain.dim == 1) return make_1d(points_per_axis, domain.extent[0]);
  return make_2d(points_per_axis, points_per_axis, domain.extent[0], domain.extent[1]);
}

double Grid::covered_measure() const {
  double m = n[0] * h[0];
  if (dim == 2) m *= n[1] * h[1];
  return m;
}

GridField::GridField(const Grid& g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != g.size())
    throw ConfigError("field: value count does not match interior node count");
}

bool GridField::all_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

namespace {

double profile_1d(const InitialCondition& ic, double x, double L) {
  constexpr double pi = 3.14159265358979323846;
  switch (ic.profile) {
    case InitialCondition::Profile::Zero:
      return 0.0;
    case InitialCondition::Profile::Sine:
      return std::sin(ic.mode * pi * x / L);
    case InitialCondition::Profile::Parabola:
      return 4.0 * x * (L - x) / (L * L);
    default:
      return 0.0;
  }
}

}  // namespace

GridField make_initial_field(const InitialCondition& ic, const Grid& grid) {
  GridField u(grid);
  if (ic.profile == InitialCondition::Profile::Random ||
      ic.profile == InitialCondition::Profile::RandomPositive) {
    std::mt19937_64 rng(ic.seed);
    const bool positive = ic.profile == InitialCondition::Profile::RandomPositive;
    std::uniform_real_distribution<double> dist(positive ? 0.0 : -1.0, 1.0);
    for (auto& v : u.values) v = ic.amplitude * dist(rng);
    return u;
  }
  if (grid.dim == 1) {
    for (int i = 0; i < grid.n[0]; ++i)
      u.values[static_cast<std::size_t>(i)] =
          ic.amplitude * profile_1d(ic, grid.coord(0, i), grid.extent[0]);
  } else {
    for (int j = 0; j < grid.n[1]; ++j)
      for (int i = 0; i < grid.n[0]; ++i)
        u.values[grid.index(i, j)] =
            ic.amplitude * profile_1d(ic, grid.coord(0, i), grid.extent[0]) *
            profile_1d(ic, grid.coord(1, j), grid.extent[1]);
  }
  return u;
}

}  // namespace nlpl
