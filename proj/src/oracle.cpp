#include "qpmlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qpm {

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

const char* point_kind_name(PointKind k) {
  switch (k) {
    case PointKind::Start: return "start";
    case PointKind::End: return "end";
    case PointKind::Fixed: return "fixed";
  }
  return "?";
}

std::vector<Point> brute_force_points(const Space& s, const SetValuedMap& t, PointKind kind,
                                      double eps, const std::optional<GridSpec>& grid) {
  std::vector<Point> hits;
  for (Point x : enumerate_points(s, grid)) {
    double value = 0.0;
    switch (kind) {
      case PointKind::Start:
        value = f_start(s, t, x);
        break;
      case PointKind::End:
        value = f_end(s, t, x);
        break;
      case PointKind::Fixed: {
        const PointSet img = t.image(s, x);
        double best = std::numeric_limits<double>::infinity();
        for (Point y : img.elems()) {
          best = std::min(best, distance_in_view(s, MetricView::Symmetric, x, y));
        }
        value = best;
        break;
      }
    }
    if (value <= eps) hits.push_back(x);
  }
  return hits;
}

HypothesisReport exhaustive_hypothesis_check(const Space& s, const SetValuedMap& t,
                                             const VariantSpec& v,
                                             const std::optional<GridSpec>& grid,
                                             const HypothesisCheckOptions& opts) {
  HypothesisReport report;
  report.variant = v.id;
  report.mode = v.mode;
  report.tol_feas = opts.tol_feas;
  if (grid) report.grid_step = grid->step;

  report.gauge_report = check_variant_conditions(v, 2.0 * s.diameter(), opts.gauge);

  const std::vector<Point> pts = enumerate_points(s, grid);
  report.points_checked = pts.size();
  for (Point x : pts) {
    std::vector<CandidateCheck> cands = check_candidates(s, t, x, v, opts.tol_feas);
    const bool any = std::any_of(cands.begin(), cands.end(),
                                 [](const CandidateCheck& c) { return c.feasible; });
    if (!any) {
      report.witnesses.push_back(
          {x, mode_functional(s, t, x, v.mode), std::move(cands)});
    }
  }
  report.feasible_everywhere = report.witnesses.empty();
  return report;
}

Space random_space(int n, std::uint64_t seed, const RandomSpaceParams& params) {
  if (n < 1) throw Error(Errc::InvalidArgument, "random space needs n >= 1");
  Rng rng(seed);
  Eigen::MatrixXd raw = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const double roll = rng.u01();
      double cost;
      if (roll < params.zero_fraction) {
        cost = 0.0;
      } else if (roll < params.zero_fraction + params.sparse_fraction) {
        cost = params.scale;
      } else {
        cost = (1.0 - rng.u01()) * params.scale;  // in (0, scale]
      }
      raw(i, j) = cost;
    }
  }

  Space closed = metric_closure(raw);

  // Break every pair with both directed distances zero by lifting the
  // ascending direction, then close again. No zero-cost path can reappear:
  // inside a zero class every ascending edge now costs kT0Perturb, and any
  // detour through an outside point has a positive leg.
  Eigen::MatrixXd m = closed.dist_matrix();
  bool perturbed = false;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m(i, j) == 0.0 && m(j, i) == 0.0) {
        m(i, j) = kT0Perturb;
        perturbed = true;
      }
    }
  }
  return perturbed ? metric_closure(m) : closed;
}

SetValuedMap random_setmap(const Space& s, std::uint64_t seed, int max_card) {
  if (s.kind() != SpaceKind::Matrix) {
    throw Error(Errc::InvalidArgument, "random maps are drawn over matrix spaces");
  }
  if (max_card < 1) throw Error(Errc::InvalidArgument, "max_card must be >= 1");
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(s.size());
  const auto cap = std::min<std::size_t>(static_cast<std::size_t>(max_card), n);

  std::vector<PointSet> images;
  images.reserve(n);
  std::vector<Point> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Point>(i);

  for (std::size_t i = 0; i < n; ++i) {
    const auto card = static_cast<std::size_t>(1 + rng.below(cap));
    // Partial Fisher-Yates draw of `card` distinct points.
    std::vector<Point> deck = pool;
    for (std::size_t k = 0; k < card; ++k) {
      const std::size_t pick = k + static_cast<std::size_t>(rng.below(deck.size() - k));
      std::swap(deck[k], deck[pick]);
    }
    deck.resize(card);
    images.emplace_back(std::move(deck));
  }
  return SetValuedMap::table(std::move(images));
}

}  // namespace qpm
