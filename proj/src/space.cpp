#include "qpmlab/space.hpp"

#include <algorithm>
#include <cmath>

namespace qpm {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::PointOutOfDomain: return "PointOutOfDomain";
    case Errc::GridRequired: return "GridRequired";
    case Errc::NegativeRadius: return "NegativeRadius";
    case Errc::EmptyTail: return "EmptyTail";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::NonzeroDiagonal: return "NonzeroDiagonal";
    case Errc::EmptySet: return "EmptySet";
    case Errc::EmptyImage: return "EmptyImage";
    case Errc::NegativeArgument: return "NegativeArgument";
    case Errc::RatioOutOfRange: return "RatioOutOfRange";
    case Errc::NoFeasibleSuccessor: return "NoFeasibleSuccessor";
    case Errc::TraceTooShort: return "TraceTooShort";
    case Errc::SchemaError: return "SchemaError";
    case Errc::UnknownVariant: return "UnknownVariant";
    case Errc::UnknownRule: return "UnknownRule";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Space Space::from_matrix(Eigen::MatrixXd dist) {
  if (dist.rows() == 0 || dist.rows() != dist.cols()) {
    throw Error(Errc::InvalidArgument, "distance matrix must be square and nonempty");
  }
  Space s;
  s.kind_ = SpaceKind::Matrix;
  s.dist_ = std::move(dist);
  return s;
}

Space Space::interval(double lo, double hi, IntervalRule rule) {
  if (!(std::isfinite(lo) && std::isfinite(hi)) || !(lo < hi)) {
    throw Error(Errc::InvalidArgument, "interval bounds must be finite with lo < hi");
  }
  Space s;
  s.kind_ = SpaceKind::Interval;
  s.lo_ = lo;
  s.hi_ = hi;
  s.rule_ = rule;
  return s;
}

bool Space::contains(Point x) const {
  if (!std::isfinite(x)) return false;
  if (kind_ == SpaceKind::Matrix) {
    return x >= 0.0 && x < static_cast<double>(size()) && x == std::floor(x);
  }
  return x >= lo_ && x <= hi_;
}

double Space::diameter() const {
  if (kind_ == SpaceKind::Matrix) {
    return size() > 0 ? dist_.maxCoeff() : 0.0;
  }
  return hi_ - lo_;  // MaxDiff attains hi - lo
}

namespace {

double interval_rule_eval(IntervalRule rule, MetricView view, Point x, Point y) {
  switch (rule) {
    case IntervalRule::MaxDiff: {
      const double forward = std::max(x - y, 0.0);
      const double backward = std::max(y - x, 0.0);
      switch (view) {
        case MetricView::Primal: return forward;
        case MetricView::Conjugate: return backward;
        case MetricView::Symmetric: return std::max(forward, backward);
      }
    }
  }
  throw Error(Errc::UnknownRule, "unhandled interval rule");
}

}  // namespace

double distance(const Space& s, Point x, Point y) {
  if (!s.contains(x) || !s.contains(y)) {
    throw Error(Errc::PointOutOfDomain, "point not in space");
  }
  if (s.kind() == SpaceKind::Matrix) {
    return s.dist_matrix()(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));
  }
  return interval_rule_eval(s.rule(), s.view(), x, y);
}

double distance_in_view(const Space& s, MetricView view, Point x, Point y) {
  switch (view) {
    case MetricView::Primal: return distance(s, x, y);
    case MetricView::Conjugate: return distance(s, y, x);
    case MetricView::Symmetric: return std::max(distance(s, x, y), distance(s, y, x));
  }
  throw Error(Errc::InvalidArgument, "unhandled view");
}

Space conjugate(const Space& s) {
  Space out = s;
  if (s.kind_ == SpaceKind::Matrix) {
    out.dist_ = s.dist_.transpose();
    return out;
  }
  switch (s.view_) {
    case MetricView::Primal: out.view_ = MetricView::Conjugate; break;
    case MetricView::Conjugate: out.view_ = MetricView::Primal; break;
    case MetricView::Symmetric: break;  // (d^s)^-1 = d^s
  }
  return out;
}

Space symmetrize(const Space& s) {
  Space out = s;
  if (s.kind_ == SpaceKind::Matrix) {
    out.dist_ = s.dist_.cwiseMax(s.dist_.transpose().eval());
    return out;
  }
  out.view_ = MetricView::Symmetric;
  return out;
}

bool ball_membership(const Space& s, Point center, double radius, Point y,
                     bool closed, MetricView view) {
  if (radius < 0.0 || (!closed && radius == 0.0)) {
    throw Error(Errc::NegativeRadius, "radius must be > 0 (open) or >= 0 (closed)");
  }
  const double d = distance_in_view(s, view, center, y);
  return closed ? d <= radius : d < radius;
}

std::vector<Point> enumerate_points(const Space& s, const std::optional<GridSpec>& grid) {
  std::vector<Point> pts;
  if (s.kind() == SpaceKind::Matrix) {
    pts.reserve(static_cast<std::size_t>(s.size()));
    for (Eigen::Index i = 0; i < s.size(); ++i) pts.push_back(static_cast<Point>(i));
    return pts;
  }
  if (!grid || !(grid->step > 0.0)) {
    throw Error(Errc::GridRequired, "interval space enumeration needs a grid step > 0");
  }
  const double span = s.hi() - s.lo();
  const auto count = static_cast<std::size_t>(std::floor(span / grid->step + 1e-9)) + 1;
  pts.reserve(count + 1);
  for (std::size_t i = 0; i < count; ++i) {
    pts.push_back(std::min(s.lo() + static_cast<double>(i) * grid->step, s.hi()));
  }
  if (pts.back() != s.hi()) pts.push_back(s.hi());
  return pts;
}

AxiomReport verify_axioms(const Space& s, const AxiomCheckOptions& opts) {
  AxiomReport report;
  report.tol = opts.tol;
  report.sampled = s.kind() == SpaceKind::Interval;
  report.t0_checked = opts.check_t0;

  const std::vector<Point> pts = enumerate_points(s, opts.grid);
  report.points_checked = pts.size();

  for (Point x : pts) {
    for (Point y : pts) {
      const double d = distance(s, x, y);
      if (!std::isfinite(d) || d < 0.0) {
        report.entries_ok = false;
        if (!report.bad_entry) report.bad_entry = {{x, y}};
      }
    }
    if (distance(s, x, x) != 0.0 && !report.bad_diag) {
      report.zero_diag_ok = false;
      report.bad_diag = x;
    }
  }

  for (Point x : pts) {
    for (Point y : pts) {
      const double dxy = distance(s, x, y);
      for (Point z : pts) {
        const double lhs = distance(s, x, z);
        const double rhs = dxy + distance(s, y, z);
        if (lhs > rhs + opts.tol) {
          report.triangle_ok = false;
          if (!report.triangle_witness) {
            report.triangle_witness = AxiomReport::TriangleWitness{x, y, z, lhs, rhs};
          }
        }
      }
    }
  }

  if (opts.check_t0) {
    for (Point x : pts) {
      for (Point y : pts) {
        if (x < y && distance(s, x, y) == 0.0 && distance(s, y, x) == 0.0) {
          report.t0_ok = false;
          if (!report.t0_witness) report.t0_witness = {{x, y}};
        }
      }
    }
  }
  return report;
}

Space metric_closure(const Eigen::MatrixXd& raw) {
  if (raw.rows() == 0 || raw.rows() != raw.cols()) {
    throw Error(Errc::InvalidArgument, "closure input must be square and nonempty");
  }
  const Eigen::Index n = raw.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!std::isfinite(raw(i, j)) || raw(i, j) < 0.0) {
        throw Error(Errc::NegativeEntry, "raw costs must be finite and non-negative");
      }
    }
    if (raw(i, i) != 0.0) {
      throw Error(Errc::NonzeroDiagonal, "raw cost matrix must have a zero diagonal");
    }
  }

  Eigen::MatrixXd closed = raw;
  // Repeat relaxation passes until nothing improves; the fixed point makes
  // d(i,j) <= d(i,k) + d(k,j) hold exactly in floating point.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index i = 0; i < n; ++i) {
        const double dik = closed(i, k);
        for (Eigen::Index j = 0; j < n; ++j) {
          const double cand = dik + closed(k, j);
          if (cand < closed(i, j)) {
            closed(i, j) = cand;
            changed = true;
          }
        }
      }
    }
  }
  return Space::from_matrix(std::move(closed));
}

}  // namespace qpm
