#include "qpmlab/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qpm {

bool GaugeRange::admits(double v) const {
  if (!std::isfinite(v)) return false;
  switch (kind) {
    case Kind::Unit: return v >= 0.0 && v < 1.0;
    case Kind::LowerOpen: return v >= b && v < 1.0;
    case Kind::LowerClosed: return v >= b && v <= 1.0;
    case Kind::NonNegative: return v >= 0.0;
  }
  return false;
}

Gauge Gauge::constant(double c, GaugeRange range) {
  if (!std::isfinite(c)) throw Error(Errc::InvalidArgument, "constant gauge value must be finite");
  Gauge g;
  g.kind_ = GaugeKind::Constant;
  g.value_ = c;
  g.range_ = range;
  return g;
}

Gauge Gauge::affine(double slope, double intercept, GaugeRange range) {
  if (!std::isfinite(slope) || !std::isfinite(intercept)) {
    throw Error(Errc::InvalidArgument, "affine gauge coefficients must be finite");
  }
  Gauge g;
  g.kind_ = GaugeKind::Affine;
  g.slope_ = slope;
  g.intercept_ = intercept;
  g.range_ = range;
  return g;
}

Gauge Gauge::ratio(GaugeRange range) {
  Gauge g;
  g.kind_ = GaugeKind::Ratio;
  g.range_ = range;
  return g;
}

Gauge Gauge::table(std::vector<std::array<double, 2>> knots, GaugeRange range) {
  if (knots.empty()) throw Error(Errc::InvalidArgument, "table gauge needs at least one knot");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!std::isfinite(knots[i][0]) || !std::isfinite(knots[i][1]) || knots[i][0] < 0.0) {
      throw Error(Errc::InvalidArgument, "table knots must be finite with t >= 0");
    }
    if (i > 0 && !(knots[i - 1][0] < knots[i][0])) {
      throw Error(Errc::InvalidArgument, "table knots must be strictly increasing in t");
    }
  }
  Gauge g;
  g.kind_ = GaugeKind::Table;
  g.knots_ = std::move(knots);
  g.range_ = range;
  return g;
}

double Gauge::operator()(double t) const {
  if (!(t >= 0.0)) throw Error(Errc::NegativeArgument, "gauges are defined on [0,inf)");
  switch (kind_) {
    case GaugeKind::Constant:
      return value_;
    case GaugeKind::Affine:
      return slope_ * t + intercept_;
    case GaugeKind::Ratio:
      return t / (1.0 + t);
    case GaugeKind::Table: {
      if (t <= knots_.front()[0]) return knots_.front()[1];
      if (t >= knots_.back()[0]) return knots_.back()[1];
      auto hi = std::upper_bound(knots_.begin(), knots_.end(), t,
                                 [](double v, const auto& k) { return v < k[0]; });
      const auto& b = *hi;
      const auto& a = *(hi - 1);
      const double w = (t - a[0]) / (b[0] - a[0]);
      return a[1] + w * (b[1] - a[1]);
    }
  }
  throw Error(Errc::InvalidArgument, "unhandled gauge kind");
}

std::vector<double> verification_grid(double t_max, const GaugeCheckOptions& opts,
                                      const std::vector<double>& extra_knots) {
  if (!(t_max > 0.0)) t_max = 1.0;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(opts.grid_points) + extra_knots.size() + 1);
  grid.push_back(0.0);
  const double t_min = t_max * 1e-8;
  const int n = std::max(2, opts.grid_points);
  const double log_lo = std::log(t_min), log_hi = std::log(t_max);
  for (int i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(n - 1);
    grid.push_back(std::exp(log_lo + f * (log_hi - log_lo)));
  }
  for (double k : extra_knots) {
    if (k >= 0.0 && k <= t_max) grid.push_back(k);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

PointwiseResult check_pointwise_dominance(const GaugePair& pair, const std::vector<double>& grid,
                                          double strict_margin) {
  for (double t : grid) {
    if (t <= 0.0) continue;  // strict comparisons are read on t > 0
    if (!(pair.phi(t) <= pair.eta(t) - strict_margin)) return {false, t};
  }
  return {};
}

PointwiseResult check_range(const Gauge& g, const std::vector<double>& grid) {
  for (double t : grid) {
    if (!g.range().admits(g(t))) return {false, t};
  }
  return {};
}

namespace {

template <typename Fn>
LimsupEstimate estimate_limsup_impl(Fn&& value_at, double t, const GaugeCheckOptions& opts) {
  LimsupEstimate est;
  if (opts.window_schedule.empty() || opts.samples_per_window < 1) {
    throw Error(Errc::InvalidArgument, "limsup estimation needs windows and samples");
  }
  for (double delta : opts.window_schedule) {
    double worst = 0.0;
    for (int k = 1; k <= opts.samples_per_window; ++k) {
      const double r = t + delta * static_cast<double>(k) / opts.samples_per_window;
      worst = std::max(worst, value_at(r));
    }
    est.estimate = worst;  // keep the finest window's max
    est.finest_delta = delta;
  }
  est.pass = est.estimate <= 1.0 - opts.margin;
  return est;
}

}  // namespace

LimsupEstimate estimate_limsup_ratio(const GaugePair& pair, double t,
                                     const GaugeCheckOptions& opts) {
  if (!(t >= 0.0)) throw Error(Errc::NegativeArgument, "limsup probe must be >= 0");
  return estimate_limsup_impl(
      [&](double r) {
        const double num = pair.phi(r);
        const double den = pair.eta(r);
        if (den <= 0.0) return num <= 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        return num / den;
      },
      t, opts);
}

LimsupEstimate estimate_limsup_value(const Gauge& g, double t, const GaugeCheckOptions& opts) {
  if (!(t >= 0.0)) throw Error(Errc::NegativeArgument, "limsup probe must be >= 0");
  return estimate_limsup_impl([&](double r) { return g(r); }, t, opts);
}

ShapeResult check_shape_properties(const Gauge& g, const std::set<GaugeProp>& props,
                                   const std::vector<double>& grid,
                                   const GaugeCheckOptions& opts) {
  if (grid.empty()) throw Error(Errc::InvalidArgument, "shape checks need a nonempty grid");

  if (props.contains(GaugeProp::NonDecreasing)) {
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      if (!(g(grid[i]) <= g(grid[i + 1]))) return {false, GaugeProp::NonDecreasing, grid[i + 1]};
    }
  }
  if (props.contains(GaugeProp::Subadditive)) {
    // Pairwise scan on a subsampled grid; s + t stays within the grid span.
    const double t_max = grid.back();
    std::vector<double> sub;
    const std::size_t stride =
        std::max<std::size_t>(1, grid.size() / static_cast<std::size_t>(opts.subadd_points));
    for (std::size_t i = 0; i < grid.size(); i += stride) sub.push_back(grid[i]);
    for (double s : sub) {
      for (double t : sub) {
        if (s + t > t_max) continue;
        if (!(g(s + t) <= g(s) + g(t) + opts.strict_margin)) {
          return {false, GaugeProp::Subadditive, s + t};
        }
      }
    }
  }
  if (props.contains(GaugeProp::Continuous)) {
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const double jump = std::abs(g(grid[i + 1]) - g(grid[i]));
      const double spacing = grid[i + 1] - grid[i];
      if (jump > opts.continuity_modulus * spacing) return {false, GaugeProp::Continuous, grid[i + 1]};
    }
  }
  if (props.contains(GaugeProp::LeIdentity)) {
    for (double t : grid) {
      if (!(g(t) <= t)) return {false, GaugeProp::LeIdentity, t};
    }
  }
  if (props.contains(GaugeProp::LtIdentity)) {
    for (double t : grid) {
      if (t <= 0.0) continue;
      if (!(g(t) <= t - opts.strict_margin)) return {false, GaugeProp::LtIdentity, t};
    }
  }
  return {};
}

double iterate(const Gauge& g, double t, int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "iteration count must be >= 0");
  double v = t;
  for (int i = 0; i < n; ++i) v = g(v);
  return v;
}

double derived_psi(double phi_value) {
  if (!(phi_value >= 0.0) || phi_value >= 1.0) {
    throw Error(Errc::RatioOutOfRange, "Psi is defined for Phi values in [0,1)");
  }
  return phi_value * (2.0 - phi_value);
}

}  // namespace qpm
