#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "nlpl/problem.hpp"

namespace nlpl {

// Uniform grid of interior nodes with the implicit homogeneous Dirichlet
// boundary. Interior-point convention: spacing h = extent/(n+1), nodes at
// (i+1)h, so the zero boundary needs no rows of its own.
struct Grid {
  int dim = 1;
  std::array<int, 2> n{1, 1};          // interior nodes per axis (n[1] ignored in 1D)
  std::array<double, 2> extent{1.0, 1.0};
  std::array<double, 2> h{0.5, 0.5};

  static Grid make_1d(int n, double extent);
  static Grid make_2d(int nx, int ny, double ex, double ey);
  static Grid from_domain(const DomainSpec& domain, int points_per_axis);

  std::size_t size() const {
    return static_cast<std::size_t>(n[0]) *
           (dim == 2 ? static_cast<std::size_t>(n[1]) : 1u);
  }
  // Quadrature weight of one node (h in 1D, hx*hy in 2D).
  double cell_measure() const { return dim == 1 ? h[0] : h[0] * h[1]; }
  // Measure covered by the interior cells: n*h per axis.
  double covered_measure() const;
  double coord(int axis, int i) const { return h[axis] * (i + 1); }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(n[0]) * static_cast<std::size_t>(j);
  }
};

// Field of nodal values on a grid; the boundary value is implicitly 0.
struct GridField {
  Grid grid;
  std::vector<double> values;

  GridField() = default;
  explicit GridField(const Grid& g) : grid(g), values(g.size(), 0.0) {}
  GridField(const Grid& g, std::vector<double> v);

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const { return values.size(); }
  bool all_finite() const;
};

// Evaluates a named initial profile onto the grid. Random profiles draw one
// value per node from a seeded generator in node order.
GridField make_initial_field(const InitialCondition& ic, const Grid& grid);

}  // namespace nlpl
