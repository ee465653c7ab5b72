#pragma once

// Seeded finite scenarios whose successor inequalities hold at every point:
// a descending chain 0 <- 1 <- ... <- n-1 with geometrically shrinking edge
// costs, expensive ascents, and per-variant gauges picked with enough margin
// that the exhaustive hypothesis check passes. Point 0 is the unique
// start/end/fixed point.

#include "qpmlab/oracle.hpp"

namespace qpmtest {

struct ChainScenario {
  qpm::Space space;
  qpm::SetValuedMap map;
  qpm::VariantSpec variant;
  int n = 0;
};

inline ChainScenario make_chain_scenario(qpm::VariantId id, std::uint64_t seed,
                                         qpm::IterationMode mode = qpm::IterationMode::Start) {
  using namespace qpm;
  Rng rng(seed ^ 0xc8a5u);
  auto uniform = [&](double lo, double hi) { return lo + rng.u01() * (hi - lo); };

  const int n = 3 + static_cast<int>(rng.below(8));  // 3..10 points
  const double g = uniform(0.2, 0.3);                // edge decay down the chain
  const double scale = uniform(0.5, 2.0);

  // descending edge costs e_k = scale * g^(n-1-k) for the edge k -> k-1
  std::vector<double> edge(static_cast<std::size_t>(n), 0.0);
  double total = 0.0;
  for (int k = 1; k < n; ++k) {
    edge[static_cast<std::size_t>(k)] = scale * std::pow(g, n - 1 - k);
    total += edge[static_cast<std::size_t>(k)];
  }
  const double big = std::max(total, scale) * uniform(2.5, 4.0);

  const bool symmetric = mode == IterationMode::Fixed;
  Eigen::MatrixXd raw = Eigen::MatrixXd::Constant(n, n, big);
  raw.diagonal().setZero();
  for (int k = 1; k < n; ++k) {
    raw(k, k - 1) = edge[static_cast<std::size_t>(k)];
    if (symmetric) raw(k - 1, k) = edge[static_cast<std::size_t>(k)];
  }
  Space space = metric_closure(raw);

  std::vector<PointSet> images;
  images.reserve(static_cast<std::size_t>(n));
  images.push_back(PointSet::singleton(0.0));  // the sink maps to itself
  for (int x = 1; x < n; ++x) {
    std::vector<Point> img{static_cast<Point>(x - 1)};
    if (x >= 2 && rng.u01() < 0.4) img.push_back(static_cast<Point>(x - 2));
    images.emplace_back(std::move(img));
  }
  SetValuedMap map = SetValuedMap::table(std::move(images));

  // gauge constants with margin over the worst-case one-step ratio g(1+g)
  const double c = uniform(0.45, 0.85);
  const double h = (c + 1.0) / 2.0;
  const double slope_phi = uniform(0.45, 0.7);
  const double slope_eta = uniform(slope_phi + 0.05, 0.97);

  std::optional<Gauge> phi, eta;
  std::optional<double> cc;
  switch (id) {
    case VariantId::GabaC:
      cc = c;
      break;
    case VariantId::GabaPhi:
      phi = Gauge::constant(c, {GaugeRange::Kind::Unit, 0.0});
      break;
    case VariantId::GabaB:
      phi = Gauge::constant(c, {GaugeRange::Kind::Unit, 0.0});
      eta = Gauge::constant(h, {GaugeRange::Kind::LowerOpen, h});
      break;
    case VariantId::V1:
      phi = Gauge::constant(c, {GaugeRange::Kind::Unit, 0.0});
      eta = Gauge::constant(h, {GaugeRange::Kind::LowerOpen, h});
      break;
    case VariantId::V2:
      phi = Gauge::constant(c, {GaugeRange::Kind::Unit, 0.0});
      eta = Gauge::constant(h, {GaugeRange::Kind::LowerClosed, h});
      break;
    case VariantId::V3:
    case VariantId::V4:
    case VariantId::V5:
    case VariantId::V6:
    case VariantId::V7:
    case VariantId::V8:
      phi = Gauge::affine(slope_phi, 0.0, {GaugeRange::Kind::NonNegative, 0.0});
      eta = Gauge::affine(slope_eta, 0.0, {GaugeRange::Kind::NonNegative, 0.0});
      break;
  }

  ChainScenario out{std::move(space), std::move(map),
                    make_variant(id, mode, std::move(phi), std::move(eta), cc), n};
  return out;
}

inline const std::vector<qpm::VariantId>& conclusion_suite_variants() {
  static const std::vector<qpm::VariantId> ids = {
      qpm::VariantId::V1,      qpm::VariantId::V2, qpm::VariantId::V3, qpm::VariantId::V4,
      qpm::VariantId::V5,      qpm::VariantId::V6, qpm::VariantId::V7, qpm::VariantId::V8,
      qpm::VariantId::GabaC,   qpm::VariantId::GabaPhi,
  };
  return ids;
}

}  // namespace qpmtest
