#include "nlpl/source_function.hpp"

#include <algorithm>
#include <cmath>

#include "nlpl/errors.hpp"

namespace nlpl {

double SourceFunction::operator()(double xi) const {
  switch (kind) {
    case SourceKind::Constant:
      return value;
    case SourceKind::Quadratic:
      return xi * xi + offset;
    case SourceKind::ExpTruncated: {
      const double r = xi / scale;
      return base + amp * (1.0 - std::exp(-r * r));
    }
    case SourceKind::Table: {
      if (xi <= table_xi.front()) return table_f.front();
      if (xi >= table_xi.back()) return table_f.back();
      const auto it = std::upper_bound(table_xi.begin(), table_xi.end(), xi);
      const std::size_t j = static_cast<std::size_t>(it - table_xi.begin());
      const double x0 = table_xi[j - 1], x1 = table_xi[j];
      const double f0 = table_f[j - 1], f1 = table_f[j];
      const double w = (xi - x0) / (x1 - x0);
      return f0 + w * (f1 - f0);
    }
  }
  return value;
}

double SourceFunction::lipschitz_bound(double R) const {
  switch (kind) {
    case SourceKind::Constant:
      return 0.0;
    case SourceKind::Quadratic:
      return 2.0 * R;  // sup |f'| on [-R, R]
    case SourceKind::ExpTruncated: {
      // f'(xi) = amp * 2 xi / scale^2 * exp(-(xi/scale)^2), peaked at
      // xi = scale/sqrt(2).
      const double r = R / scale;
      const double rstar = 1.0 / std::sqrt(2.0);
      const double reff = std::min(r, rstar);
      return amp * (2.0 / scale) * reff * std::exp(-reff * reff);
    }
    case SourceKind::Table: {
      double worst = 0.0;
      for (std::size_t j = 1; j < table_xi.size(); ++j) {
        const double slope = std::abs((table_f[j] - table_f[j - 1]) /
                                      (table_xi[j] - table_xi[j - 1]));
        worst = std::max(worst, slope);
      }
      return worst;
    }
  }
  return 0.0;
}

std::string SourceFunction::kind_name() const {
  switch (kind) {
    case SourceKind::Constant:
      return "constant";
    case SourceKind::Quadratic:
      return "quadratic";
    case SourceKind::ExpTruncated:
      return "exp-truncated";
    case SourceKind::Table:
      return "table";
  }
  return "?";
}

void SourceFunction::validate() const {
  if (!(sigma > 0.0)) throw ConfigError("source: sigma must be > 0");
  if (!(c1 > 0.0)) throw ConfigError("source: c1 must be > 0");
  if (!(c2 > 0.0)) throw ConfigError("source: c2 must be > 0");
  if (!(alpha > 0.0)) throw ConfigError("source: alpha must be > 0");
  switch (kind) {
    case SourceKind::Constant:
      if (!(value > 0.0)) throw ConfigError("source: constant value must be > 0");
      break;
    case SourceKind::Quadratic:
      if (!(offset > 0.0)) throw ConfigError("source: quadratic offset must be > 0");
      break;
    case SourceKind::ExpTruncated:
      if (!(base > 0.0)) throw ConfigError("source: exp-truncated base must be > 0");
      if (!(amp >= 0.0)) throw ConfigError("source: exp-truncated amp must be >= 0");
      if (!(scale > 0.0)) throw ConfigError("source: exp-truncated scale must be > 0");
      break;
    case SourceKind::Table:
      if (table_xi.size() < 2 || table_xi.size() != table_f.size())
        throw ConfigError("source: table needs >= 2 matching (xi, f) pairs");
      if (!std::is_sorted(table_xi.begin(), table_xi.end()))
        throw ConfigError("source: table abscissae must be ascending");
      break;
  }
}

SourceFunction SourceFunction::constant(double c) {
  SourceFunction s;
  s.kind = SourceKind::Constant;
  s.value = c;
  s.sigma = c;
  s.c1 = 1.0;
  s.c2 = c;
  s.alpha = 1.0;
  return s;
}

SourceFunction SourceFunction::quadratic(double offset) {
  SourceFunction s;
  s.kind = SourceKind::Quadratic;
  s.offset = offset;
  s.sigma = offset;
  s.c1 = 1.0;
  s.c2 = offset;
  s.alpha = 1.0;  // xi^2 = |xi|^(alpha+1)
  return s;
}

SourceFunction SourceFunction::exp_truncated(double base, double amp, double scale) {
  SourceFunction s;
  s.kind = SourceKind::ExpTruncated;
  s.base = base;
  s.amp = amp;
  s.scale = scale;
  s.sigma = base;
  s.c1 = 1.0;
  s.c2 = base + amp;  // f is bounded above by base + amp
  s.alpha = 1.0;
  return s;
}

SourceFunction SourceFunction::table(std::vector<double> xi, std::vector<double> f,
                                     double sigma, double c1, double c2,
                                     double alpha) {
  SourceFunction s;
  s.kind = SourceKind::Table;
  s.table_xi = std::move(xi);
  s.table_f = std::move(f);
  s.sigma = sigma;
  s.c1 = c1;
  s.c2 = c2;
  s.alpha = alpha;
  return s;
}

}  // namespace nlpl
