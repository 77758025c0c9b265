#include "nlpl/nonlocal.hpp"

#include <cmath>
#include <string>

#include "nlpl/errors.hpp"

namespace nlpl {

std::vector<double> nonlocal_source(const std::vector<double>& field_values,
                                    const std::vector<double>& quadrature_weights,
                                    const SourceFunction& source, double lambda,
                                    double floor) {
  if (field_values.size() != quadrature_weights.size())
    throw ConfigError("nonlocal_source: weights and values differ in length");

  std::vector<double> f(field_values.size());
  double integral = 0.0;
  for (std::size_t i = 0; i < field_values.size(); ++i) {
    if (!(quadrature_weights[i] > 0.0))
      throw ConfigError("nonlocal_source: quadrature weights must be positive");
    f[i] = source(field_values[i]);
    if (!std::isfinite(f[i]))
      throw EvaluationError("nonlocal_source: f non-finite at xi=" +
                                std::to_string(field_values[i]),
                            field_values[i]);
    integral += quadrature_weights[i] * f[i];
  }
  if (!(integral >= floor))
    throw DegeneracyError("nonlocal_source: int f(u) = " + std::to_string(integral) +
                              " fell below the floor " + std::to_string(floor),
                          integral, floor);

  const double scale = lambda / (integral * integral);
  for (auto& v : f) v *= scale;
  return f;
}

double default_integral_floor(const SourceFunction& source,
                              const std::vector<double>& quadrature_weights) {
  double w = 0.0;
  for (double wi : quadrature_weights) w += wi;
  return 0.5 * source.sigma * w;
}

std::vector<double> nonlocal_source(const GridField& field,
                                    const SourceFunction& source, double lambda) {
  const std::vector<double> weights(field.size(), field.grid.cell_measure());
  return nonlocal_source(field.values, weights, source, lambda,
                         default_integral_floor(source, weights));
}

}  // namespace nlpl
