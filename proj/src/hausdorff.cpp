#include "qpmlab/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qpm {

PointSet::PointSet(std::vector<Point> elems) : elems_(std::move(elems)) {
  if (elems_.empty()) throw Error(Errc::EmptySet, "point set must be nonempty");
  for (Point p : elems_) {
    if (!std::isfinite(p)) throw Error(Errc::InvalidArgument, "point set entries must be finite");
  }
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool PointSet::contains(Point x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

SetValuedMap SetValuedMap::table(std::vector<PointSet> images) {
  if (images.empty()) throw Error(Errc::EmptyImage, "table map needs at least one image");
  SetValuedMap m;
  m.is_table_ = true;
  m.images_ = std::move(images);
  return m;
}

SetValuedMap SetValuedMap::closed_form(MapRule rule) {
  SetValuedMap m;
  m.rule_ = rule;
  return m;
}

PointSet SetValuedMap::image(const Space& s, Point x) const {
  if (!s.contains(x)) throw Error(Errc::PointOutOfDomain, "map argument not in space");
  if (is_table_) {
    if (s.kind() != SpaceKind::Matrix) {
      throw Error(Errc::InvalidArgument, "table maps are defined on matrix spaces");
    }
    const auto ix = static_cast<std::size_t>(x);
    if (ix >= images_.size()) {
      throw Error(Errc::PointOutOfDomain, "table map has no row for this point");
    }
    return images_[ix];
  }
  PointSet out = [&]() -> PointSet {
    switch (rule_) {
      case MapRule::Identity:
        return PointSet::singleton(x);
      case MapRule::HalfExceptSix:
        if (s.kind() != SpaceKind::Interval) {
          throw Error(Errc::InvalidArgument, "half-except-6 is an interval-space rule");
        }
        if (x == 6.0) return PointSet({4.0, 5.0});
        return PointSet::singleton(x / 2.0);
    }
    throw Error(Errc::UnknownRule, "unhandled map rule");
  }();
  for (Point p : out.elems()) {
    if (!s.contains(p)) {
      throw Error(Errc::PointOutOfDomain, "closed-form image leaves the space");
    }
  }
  return out;
}

double point_to_set(const Space& s, Point x, const PointSet& a) {
  double best = std::numeric_limits<double>::infinity();
  for (Point p : a.elems()) best = std::min(best, distance(s, x, p));
  return best;
}

double set_to_point(const Space& s, const PointSet& a, Point x) {
  double best = std::numeric_limits<double>::infinity();
  for (Point p : a.elems()) best = std::min(best, distance(s, p, x));
  return best;
}

namespace {

template <typename Dist>
double hausdorff_impl(const PointSet& a, const PointSet& b, Dist&& d) {
  double sup_a = 0.0;
  for (Point p : a.elems()) {
    double inf = std::numeric_limits<double>::infinity();
    for (Point q : b.elems()) inf = std::min(inf, d(p, q));
    sup_a = std::max(sup_a, inf);
  }
  double sup_b = 0.0;
  for (Point q : b.elems()) {
    double inf = std::numeric_limits<double>::infinity();
    for (Point p : a.elems()) inf = std::min(inf, d(p, q));
    sup_b = std::max(sup_b, inf);
  }
  return std::max(sup_a, sup_b);
}

}  // namespace

double hausdorff(const Space& s, const PointSet& a, const PointSet& b) {
  return hausdorff_impl(a, b, [&](Point p, Point q) { return distance(s, p, q); });
}

double hausdorff_sym(const Space& s, const PointSet& a, const PointSet& b) {
  return hausdorff_impl(
      a, b, [&](Point p, Point q) { return distance_in_view(s, MetricView::Symmetric, p, q); });
}

double f_start(const Space& s, const SetValuedMap& t, Point x) {
  return hausdorff(s, PointSet::singleton(x), t.image(s, x));
}

double f_end(const Space& s, const SetValuedMap& t, Point x) {
  return hausdorff(s, t.image(s, x), PointSet::singleton(x));
}

double f_sym(const Space& s, const SetValuedMap& t, Point x) {
  return hausdorff_sym(s, PointSet::singleton(x), t.image(s, x));
}

}  // namespace qpm
