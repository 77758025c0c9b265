#pragma once

#include <vector>

#include "nlpl/grid.hpp"
#include "nlpl/source_function.hpp"

namespace nlpl {

// Pointwise nonlocal reaction term
//   s_i = lambda f(u_i) / (sum_j w_j f(u_j))^2.
// Throws DegeneracyError when the quadrature of f falls below `floor`
// (an (H2) violation upstream), and EvaluationError on non-finite f.
std::vector<double> nonlocal_source(const std::vector<double>& field_values,
                                    const std::vector<double>& quadrature_weights,
                                    const SourceFunction& source, double lambda,
                                    double floor);

// Default degeneracy floor: half the analytic lower bound sigma * sum w.
double default_integral_floor(const SourceFunction& source,
                              const std::vector<double>& quadrature_weights);

// Convenience overload on a grid field with midpoint weights h^N and the
// default floor.
std::vector<double> nonlocal_source(const GridField& field,
                                    const SourceFunction& source, double lambda);

}  // namespace nlpl
