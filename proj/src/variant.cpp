#include "qpmlab/variant.hpp"

#include <algorithm>
#include <cmath>

namespace qpm {

const char* variant_name(VariantId id) {
  switch (id) {
    case VariantId::GabaC: return "GABA_C";
    case VariantId::GabaPhi: return "GABA_PHI";
    case VariantId::GabaB: return "GABA_B";
    case VariantId::V1: return "V1";
    case VariantId::V2: return "V2";
    case VariantId::V3: return "V3";
    case VariantId::V4: return "V4";
    case VariantId::V5: return "V5";
    case VariantId::V6: return "V6";
    case VariantId::V7: return "V7";
    case VariantId::V8: return "V8";
  }
  return "?";
}

const char* mode_name(IterationMode mode) {
  switch (mode) {
    case IterationMode::Start: return "start";
    case IterationMode::End: return "end";
    case IterationMode::Fixed: return "fixed";
  }
  return "?";
}

std::optional<VariantId> variant_from_name(const std::string& name) {
  static const std::pair<const char*, VariantId> table[] = {
      {"GABA_C", VariantId::GabaC}, {"GABA_PHI", VariantId::GabaPhi},
      {"GABA_B", VariantId::GabaB}, {"V1", VariantId::V1},
      {"V2", VariantId::V2},        {"V3", VariantId::V3},
      {"V4", VariantId::V4},        {"V5", VariantId::V5},
      {"V6", VariantId::V6},        {"V7", VariantId::V7},
      {"V8", VariantId::V8},
  };
  for (const auto& [n, id] : table) {
    if (name == n) return id;
  }
  return std::nullopt;
}

std::optional<IterationMode> mode_from_name(const std::string& name) {
  if (name == "start") return IterationMode::Start;
  if (name == "end") return IterationMode::End;
  if (name == "fixed") return IterationMode::Fixed;
  return std::nullopt;
}

std::set<PairProp> required_props(VariantId id) {
  switch (id) {
    case VariantId::GabaB: return {PairProp::EtaNonDecreasing};
    case VariantId::V3: return {PairProp::PhiNonDecreasing};
    case VariantId::V4: return {PairProp::EtaNonDecreasing};
    case VariantId::V5:
      return {PairProp::PhiContinuous, PairProp::PhiNonDecreasing, PairProp::EtaLeIdentity};
    case VariantId::V6:
      return {PairProp::EtaContinuous, PairProp::EtaNonDecreasing, PairProp::EtaLtIdentity};
    case VariantId::V7: return {PairProp::PhiNonDecreasing, PairProp::PhiSubadditive};
    case VariantId::V8: return {PairProp::EtaNonDecreasing, PairProp::EtaSubadditive};
    default: return {};
  }
}

namespace {

bool needs_phi(VariantId id) { return id != VariantId::GabaC; }

bool needs_eta(VariantId id) {
  return id != VariantId::GabaC && id != VariantId::GabaPhi;
}

void require_range(const Gauge& g, GaugeRange::Kind kind, const char* what) {
  if (g.range().kind != kind) {
    throw Error(Errc::InvalidArgument, std::string(what) + " has the wrong declared range");
  }
}

}  // namespace

VariantSpec make_variant(VariantId id, IterationMode mode, std::optional<Gauge> phi,
                         std::optional<Gauge> eta, std::optional<double> c,
                         std::set<PairProp> extra_props) {
  VariantSpec v;
  v.id = id;
  v.mode = mode;
  v.phi = std::move(phi);
  v.eta = std::move(eta);
  v.c = c;
  v.props = std::move(extra_props);
  for (PairProp p : required_props(id)) v.props.insert(p);

  if (id == VariantId::GabaC) {
    if (!v.c) throw Error(Errc::InvalidArgument, "GABA_C needs the contraction constant c");
    return v;
  }
  if (needs_phi(id) && !v.phi) {
    throw Error(Errc::InvalidArgument, std::string(variant_name(id)) + " needs a phi gauge");
  }
  if (needs_eta(id) && !v.eta) {
    throw Error(Errc::InvalidArgument, std::string(variant_name(id)) + " needs an eta gauge");
  }

  switch (id) {
    case VariantId::GabaPhi:
      require_range(*v.phi, GaugeRange::Kind::Unit, "phi");
      break;
    case VariantId::GabaB:
      require_range(*v.phi, GaugeRange::Kind::Unit, "phi");
      require_range(*v.eta, GaugeRange::Kind::LowerOpen, "eta");
      if (!(v.eta->range().b > 0.0)) {
        throw Error(Errc::InvalidArgument, "GABA_B's bounding gauge needs a lower bound a > 0");
      }
      break;
    case VariantId::V1:
      require_range(*v.phi, GaugeRange::Kind::Unit, "phi");
      require_range(*v.eta, GaugeRange::Kind::LowerOpen, "eta");
      if (!(v.eta->range().b > 0.0 && v.eta->range().b < 1.0)) {
        throw Error(Errc::InvalidArgument, "V1 needs eta into [b,1) with 0 < b < 1");
      }
      break;
    case VariantId::V2:
      require_range(*v.phi, GaugeRange::Kind::Unit, "phi");
      require_range(*v.eta, GaugeRange::Kind::LowerClosed, "eta");
      if (!(v.eta->range().b > 0.0 && v.eta->range().b < 1.0)) {
        throw Error(Errc::InvalidArgument, "V2 needs eta into [b,1] with 0 < b < 1");
      }
      break;
    default:
      break;  // V3..V8: any codomain inside [0,inf)
  }
  return v;
}

namespace {

std::vector<double> limsup_probes(const std::vector<double>& grid, int count) {
  std::vector<double> probes;
  if (grid.empty() || count < 1) return probes;
  const std::size_t stride = std::max<std::size_t>(1, grid.size() / static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < grid.size(); i += stride) probes.push_back(grid[i]);
  if (probes.back() != grid.back()) probes.push_back(grid.back());
  return probes;
}

std::vector<double> gauge_knot_ts(const VariantSpec& v) {
  std::vector<double> ts;
  for (const auto* g : {v.phi ? &*v.phi : nullptr, v.eta ? &*v.eta : nullptr}) {
    if (g && g->kind() == GaugeKind::Table) {
      for (const auto& k : g->knots()) ts.push_back(k[0]);
    }
  }
  return ts;
}

std::set<GaugeProp> props_for(const std::set<PairProp>& props, bool phi_side) {
  std::set<GaugeProp> out;
  for (PairProp p : props) {
    switch (p) {
      case PairProp::PhiNonDecreasing:
        if (phi_side) out.insert(GaugeProp::NonDecreasing);
        break;
      case PairProp::EtaNonDecreasing:
        if (!phi_side) out.insert(GaugeProp::NonDecreasing);
        break;
      case PairProp::PhiSubadditive:
        if (phi_side) out.insert(GaugeProp::Subadditive);
        break;
      case PairProp::EtaSubadditive:
        if (!phi_side) out.insert(GaugeProp::Subadditive);
        break;
      case PairProp::PhiContinuous:
        if (phi_side) out.insert(GaugeProp::Continuous);
        break;
      case PairProp::EtaContinuous:
        if (!phi_side) out.insert(GaugeProp::Continuous);
        break;
      case PairProp::EtaLeIdentity:
        if (!phi_side) out.insert(GaugeProp::LeIdentity);
        break;
      case PairProp::EtaLtIdentity:
        if (!phi_side) out.insert(GaugeProp::LtIdentity);
        break;
    }
  }
  return out;
}

const char* gauge_prop_name(GaugeProp p) {
  switch (p) {
    case GaugeProp::NonDecreasing: return "nondecreasing";
    case GaugeProp::Subadditive: return "subadditive";
    case GaugeProp::Continuous: return "continuous";
    case GaugeProp::LeIdentity: return "<= id";
    case GaugeProp::LtIdentity: return "< id";
  }
  return "?";
}

}  // namespace

VariantConditionReport check_variant_conditions(const VariantSpec& v, double t_max,
                                                const GaugeCheckOptions& opts) {
  VariantConditionReport report;
  report.t_max = t_max;
  auto add = [&](ConditionItem item) {
    report.pass = report.pass && item.pass;
    report.items.push_back(std::move(item));
  };

  if (v.id == VariantId::GabaC) {
    const bool ok = v.c && *v.c > 0.0 && *v.c < 1.0;
    add({"c in (0,1)", ok, false, std::nullopt, ""});
    return report;
  }

  const std::vector<double> grid = verification_grid(t_max, opts, gauge_knot_ts(v));
  const std::vector<double> probes = limsup_probes(grid, opts.limsup_probes);

  if (v.phi) {
    auto r = check_range(*v.phi, grid);
    add({"phi range", r.pass, true, r.witness_t, ""});
    auto shape = check_shape_properties(*v.phi, props_for(v.props, true), grid, opts);
    add({shape.failed_prop ? std::string("phi ") + gauge_prop_name(*shape.failed_prop)
                           : "phi shape",
         shape.pass, true, shape.witness_t, ""});
  }
  if (v.eta) {
    auto r = check_range(*v.eta, grid);
    add({"eta range", r.pass, true, r.witness_t, ""});
    auto shape = check_shape_properties(*v.eta, props_for(v.props, false), grid, opts);
    add({shape.failed_prop ? std::string("eta ") + gauge_prop_name(*shape.failed_prop)
                           : "eta shape",
         shape.pass, true, shape.witness_t, ""});
  }

  if (v.id == VariantId::GabaPhi) {
    for (double t : probes) {
      auto est = estimate_limsup_value(*v.phi, t, opts);
      if (!est.pass) {
        add({"limsup(phi) < 1", false, true, t, "estimate " + std::to_string(est.estimate)});
        return report;
      }
    }
    add({"limsup(phi) < 1", true, true, std::nullopt, ""});
    return report;
  }

  {
    auto dom = check_pointwise_dominance({*v.phi, *v.eta, v.props}, grid, opts.strict_margin);
    add({"phi < eta", dom.pass, true, dom.witness_t, ""});
  }

  if (v.id == VariantId::GabaB) {
    for (double t : probes) {
      auto ep = estimate_limsup_value(*v.phi, t, opts);
      auto eb = estimate_limsup_value(*v.eta, t, opts);
      if (!(ep.estimate <= eb.estimate - opts.margin)) {
        add({"limsup(phi) < limsup(eta)", false, true, t,
             "phi " + std::to_string(ep.estimate) + " vs eta " + std::to_string(eb.estimate)});
        return report;
      }
    }
    add({"limsup(phi) < limsup(eta)", true, true, std::nullopt, ""});
    return report;
  }

  for (double t : probes) {
    auto est = estimate_limsup_ratio({*v.phi, *v.eta, v.props}, t, opts);
    if (!est.pass) {
      add({"limsup(phi/eta) < 1", false, true, t, "estimate " + std::to_string(est.estimate)});
      return report;
    }
  }
  add({"limsup(phi/eta) < 1", true, true, std::nullopt, ""});
  return report;
}

}  // namespace qpm
