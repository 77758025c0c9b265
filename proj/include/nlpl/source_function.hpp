#pragma once

#include <string>
#include <vector>

namespace nlpl {

enum class SourceKind { Constant, Quadratic, ExpTruncated, Table };

// Reaction nonlinearity f together with its growth data: positive lower
// bound sigma and constants c1, c2, alpha of the two-sided bound
//   sigma <= f(xi) <= c1*|xi|^(alpha+1) + c2,
// plus a declared local Lipschitz bound L(R) on |xi| <= R.
//
// Built-in kinds carry analytically exact growth data; Table interpolates a
// user grid piecewise-linearly (clamped outside) and takes the data on trust.
class SourceFunction {
 public:
  SourceKind kind = SourceKind::Constant;

  // Kind-specific coefficients.
  double value = 1.0;   // Constant: f = value
  double offset = 1.0;  // Quadratic: f = xi^2 + offset
  double base = 1.0;    // ExpTruncated: f = base + amp*(1 - exp(-(xi/scale)^2))
  double amp = 1.0;
  double scale = 1.0;
  std::vector<double> table_xi;  // Table: ascending abscissae
  std::vector<double> table_f;

  // Growth data of (H2) and the lower bound sigma.
  double sigma = 1.0;
  double c1 = 1.0;
  double c2 = 1.0;
  double alpha = 1.0;

  double operator()(double xi) const;

  // Declared Lipschitz bound on the ball |xi| <= R.
  double lipschitz_bound(double R) const;

  std::string kind_name() const;

  // Throws ConfigError if the declared data is malformed (sigma <= 0,
  // non-positive growth constants, bad table).
  void validate() const;

  static SourceFunction constant(double c);
  static SourceFunction quadratic(double offset);
  static SourceFunction exp_truncated(double base, double amp, double scale);
  static SourceFunction table(std::vector<double> xi, std::vector<double> f,
                              double sigma, double c1, double c2, double alpha);
};

}  // namespace nlpl
