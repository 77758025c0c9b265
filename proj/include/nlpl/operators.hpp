#pragma once

#include <limits>
#include <vector>

#include "nlpl/grid.hpp"

namespace nlpl {

// Sentinel for the max norm in lp_norm.
inline constexpr double kInfNorm = std::numeric_limits<double>::infinity();

// Face flux phi(d) = (d^2 + eps^2)^((p-2)/2) d for the gradient quotient d.
// eps = 0 is the honest degenerate flux; p >= 2 keeps phi continuous with
// phi(0) = 0.
double pflux(double d, double p, double eps = 0.0);
// d phi / d d, used by the implicit solver's Jacobian.
double pflux_deriv(double d, double p, double eps = 0.0);

// Conservative flux-difference discretization of div(|grad u|^(p-2) grad u)
// with zero ghost values at the boundary; in 2D the axis fluxes add.
GridField p_laplacian_apply(const GridField& field, double p, double eps = 0.0);

// Midpoint rule h^N * sum(values); the boundary contributes nothing.
double integrate(const std::vector<double>& values, const Grid& grid);

// (h^N sum |u_i|^k)^(1/k); pass kInfNorm for max |u_i|.
double lp_norm(const GridField& field, double k);

// (h^N sum_faces |forward difference / h|^p)^(1/p), boundary faces against 0.
// Satisfies -sum (A_p u) u h^N = w1p_seminorm(u,p)^p up to roundoff.
double w1p_seminorm(const GridField& field, double p);

// Discrete pairing h^N sum a_i b_i.
double dot(const GridField& a, const GridField& b);

}  // namespace nlpl
