#include "qpmlab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qpm {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Converged: return "Converged";
    case Outcome::HypothesisViolation: return "HypothesisViolation";
    case Outcome::MaxIterations: return "MaxIterations";
  }
  return "?";
}

namespace {

// One directed arm of a variant's successor inequalities. In Start/End mode
// f_inner and f_outer coincide; Fixed mode pairs the d-arm (f_inner =
// H({x},Tx)) with the conjugate arm (f_inner = H(Tx,{x})) around the
// symmetrized outer functional.
void append_arm(VariantId id, const VariantSpec& v, double f_inner_x, double h, double f_outer_y,
                const char* side, std::vector<InequalityCheck>& out) {
  const std::string tag = side;
  switch (id) {
    case VariantId::GabaC:
      out.push_back({"f(y) <= c*H(x,y)" + tag, f_outer_y, *v.c * h});
      break;
    case VariantId::GabaPhi:
    case VariantId::GabaB:
    case VariantId::V2:
      out.push_back({"f(y) <= phi(H(x,y))*H(x,y)" + tag, f_outer_y, (*v.phi)(h)*h});
      break;
    case VariantId::V1:
      out.push_back({"f(y) <= phi(f(x))*H(x,y)" + tag, f_outer_y, (*v.phi)(f_inner_x)*h});
      break;
    case VariantId::V3:
    case VariantId::V4:
    case VariantId::V5:
    case VariantId::V6:
      out.push_back({"eta(H(x,y)) <= f(x)" + tag, (*v.eta)(h), f_inner_x});
      out.push_back({"f(y) <= phi(f(x))" + tag, f_outer_y, (*v.phi)(f_inner_x)});
      break;
    case VariantId::V7:
    case VariantId::V8:
      out.push_back({"eta(H(x,y)) <= f(x)" + tag, (*v.eta)(h), f_inner_x});
      out.push_back({"f(y) <= phi(H(x,y))" + tag, f_outer_y, (*v.phi)(h)});
      break;
  }
}

void finish(CandidateCheck& c, double tol_feas) {
  double slack = std::numeric_limits<double>::infinity();
  for (const auto& chk : c.checks) slack = std::min(slack, chk.rhs - chk.lhs);
  c.slack = slack;
  c.feasible = slack >= -tol_feas;
}

std::vector<CandidateCheck> candidates_start(const Space& s, const SetValuedMap& t, Point x,
                                             const VariantSpec& v, double tol_feas) {
  const PointSet img = t.image(s, x);
  const double f_x = f_start(s, t, x);
  std::vector<CandidateCheck> out;
  out.reserve(img.size());
  for (Point y : img.elems()) {
    CandidateCheck c;
    c.y = y;
    c.h_xy = distance(s, x, y);
    c.f_y = f_start(s, t, y);
    append_arm(v.id, v, f_x, c.h_xy, c.f_y, "", c.checks);
    finish(c, tol_feas);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CandidateCheck> candidates_fixed(const Space& s, const SetValuedMap& t, Point x,
                                             const VariantSpec& v, double tol_feas) {
  const PointSet img = t.image(s, x);
  const double f_fwd = f_start(s, t, x);
  const double f_bwd = f_end(s, t, x);
  std::vector<CandidateCheck> out;
  out.reserve(img.size());
  for (Point y : img.elems()) {
    CandidateCheck c;
    c.y = y;
    c.h_xy = distance_in_view(s, MetricView::Symmetric, x, y);
    c.f_y = f_sym(s, t, y);
    append_arm(v.id, v, f_fwd, distance(s, x, y), c.f_y, " [d]", c.checks);
    append_arm(v.id, v, f_bwd, distance(s, y, x), c.f_y, " [d^-1]", c.checks);
    finish(c, tol_feas);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<CandidateCheck> check_candidates(const Space& s, const SetValuedMap& t, Point x,
                                             const VariantSpec& v, double tol_feas) {
  switch (v.mode) {
    case IterationMode::Start:
      return candidates_start(s, t, x, v, tol_feas);
    case IterationMode::End:
      return candidates_start(conjugate(s), t, x, v, tol_feas);
    case IterationMode::Fixed:
      return candidates_fixed(s, t, x, v, tol_feas);
  }
  throw Error(Errc::InvalidArgument, "unhandled mode");
}

std::vector<CandidateCheck> feasible_successors(const Space& s, const SetValuedMap& t, Point x,
                                                const VariantSpec& v, double tol_feas) {
  std::vector<CandidateCheck> all = check_candidates(s, t, x, v, tol_feas);
  std::erase_if(all, [](const CandidateCheck& c) { return !c.feasible; });
  return all;
}

const CandidateCheck& select_successor(const std::vector<CandidateCheck>& feasible) {
  if (feasible.empty()) {
    throw Error(Errc::NoFeasibleSuccessor, "no candidate satisfies the variant inequalities");
  }
  const CandidateCheck* best = &feasible.front();
  for (const auto& c : feasible) {
    if (c.f_y < best->f_y ||
        (c.f_y == best->f_y && (c.h_xy < best->h_xy ||
                                (c.h_xy == best->h_xy && c.y < best->y)))) {
      best = &c;
    }
  }
  return *best;
}

double mode_functional(const Space& s, const SetValuedMap& t, Point x, IterationMode mode) {
  switch (mode) {
    case IterationMode::Start: return f_start(s, t, x);
    case IterationMode::End: return f_end(s, t, x);
    case IterationMode::Fixed: return f_sym(s, t, x);
  }
  throw Error(Errc::InvalidArgument, "unhandled mode");
}

namespace {

double step_distance(const Space& s, Point x, Point y, IterationMode mode) {
  switch (mode) {
    case IterationMode::Start: return distance(s, x, y);
    case IterationMode::End: return distance(s, y, x);
    case IterationMode::Fixed: return distance_in_view(s, MetricView::Symmetric, x, y);
  }
  throw Error(Errc::InvalidArgument, "unhandled mode");
}

}  // namespace

IterationTrace solve(const Space& s, const SetValuedMap& t, const VariantSpec& v, Point x0,
                     const SolveOptions& opts) {
  if (!s.contains(x0)) throw Error(Errc::PointOutOfDomain, "start point not in space");
  if (!(opts.eps > 0.0) || opts.max_iter < 1) {
    throw Error(Errc::InvalidArgument, "need eps > 0 and max_iter >= 1");
  }

  IterationTrace trace;
  trace.variant = v.id;
  trace.mode = v.mode;
  trace.opts = opts;

  Point x = x0;
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    const double f_x = mode_functional(s, t, x, v.mode);
    if (f_x <= opts.eps) {
      trace.outcome = Outcome::Converged;
      trace.final_x = x;
      trace.final_f = f_x;
      return trace;
    }
    std::vector<CandidateCheck> cands = check_candidates(s, t, x, v, opts.tol_feas);
    const CandidateCheck* pick = nullptr;
    if (opts.first_feasible) {
      for (const auto& c : cands) {
        if (c.feasible) { pick = &c; break; }
      }
    } else {
      std::vector<CandidateCheck> feas = cands;
      std::erase_if(feas, [](const CandidateCheck& c) { return !c.feasible; });
      if (!feas.empty()) {
        const CandidateCheck& chosen = select_successor(feas);
        for (const auto& c : cands) {
          if (c.y == chosen.y) { pick = &c; break; }
        }
      }
    }
    if (pick == nullptr) {
      trace.outcome = Outcome::HypothesisViolation;
      trace.final_x = x;
      trace.final_f = f_x;
      trace.violation = StepReport{x, f_x, std::move(cands)};
      return trace;
    }
    trace.steps.push_back({x, f_x, step_distance(s, x, pick->y, v.mode), pick->y, pick->slack});
    x = pick->y;
  }
  trace.outcome = Outcome::MaxIterations;
  trace.final_x = x;
  trace.final_f = mode_functional(s, t, x, v.mode);
  return trace;
}

TraceValidation validate_trace(const Space& s, const SetValuedMap& t, const VariantSpec& v,
                               const IterationTrace& trace) {
  auto fail = [](std::string msg) { return TraceValidation{false, std::move(msg)}; };
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& st = trace.steps[i];
    const PointSet img = t.image(v.mode == IterationMode::End ? conjugate(s) : s, st.x);
    if (!img.contains(st.y)) return fail("step " + std::to_string(i) + ": y not in T(x)");
    const double f_now = mode_functional(s, t, st.x, v.mode);
    if (std::abs(f_now - st.f_x) > kRecomputeTol) {
      return fail("step " + std::to_string(i) + ": f mismatch on recomputation");
    }
    const std::vector<CandidateCheck> cands = check_candidates(s, t, st.x, v, trace.opts.tol_feas);
    const auto it = std::find_if(cands.begin(), cands.end(),
                                 [&](const CandidateCheck& c) { return c.y == st.y; });
    if (it == cands.end() || !it->feasible) {
      return fail("step " + std::to_string(i) + ": recorded successor infeasible");
    }
    if (std::abs(it->slack - st.slack) > kRecomputeTol) {
      return fail("step " + std::to_string(i) + ": slack mismatch on recomputation");
    }
    const Point next = i + 1 < trace.steps.size() ? trace.steps[i + 1].x : trace.final_x;
    if (next != st.y) return fail("step " + std::to_string(i) + ": broken chain");
  }
  if (trace.outcome == Outcome::Converged) {
    const double f_final = mode_functional(s, t, trace.final_x, v.mode);
    if (std::abs(f_final - trace.final_f) > kRecomputeTol) return fail("final f mismatch");
    if (!(trace.final_f <= trace.opts.eps)) return fail("converged above eps");
  }
  return {};
}

DecayReport decay_diagnostics(const Space& s, const IterationTrace& trace,
                              const DecayOptions& opts) {
  if (trace.steps.size() < 3) {
    throw Error(Errc::TraceTooShort, "decay diagnostics need at least 3 recorded steps");
  }
  if (trace.outcome == Outcome::HypothesisViolation) {
    throw Error(Errc::TraceTooShort, "decay diagnostics need a Converged or MaxIterations trace");
  }

  std::vector<double> f_seq;
  f_seq.reserve(trace.steps.size() + 1);
  for (const auto& st : trace.steps) f_seq.push_back(st.f_x);
  f_seq.push_back(trace.final_f);

  DecayReport report;

  std::size_t m = f_seq.size() - 1;
  while (m > 0 && f_seq[m] <= f_seq[m - 1]) --m;
  report.monotone_from = m;
  report.monotone_all = m == 0;

  // Largest one-step ratio over the tail quarter; zero-valued f skipped, as
  // the proofs treat f = 0 as already terminal.
  const std::size_t ratios = f_seq.size() - 1;
  const auto tail_len = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(static_cast<double>(ratios) * opts.tail_fraction)));
  std::optional<double> q;
  for (std::size_t i = ratios - tail_len; i < ratios; ++i) {
    if (f_seq[i] == 0.0) continue;
    const double r = f_seq[i + 1] / f_seq[i];
    q = q ? std::max(*q, r) : r;
  }
  report.q_hat = q;

  bool bound_ok = true;
  for (const auto& st : trace.steps) {
    if (st.d_n == 0.0) continue;
    if (!(st.d_n < 2.0 * st.f_x)) bound_ok = false;
  }
  report.dn_bound_ok = bound_ok;

  Space working = s;
  if (trace.mode == IterationMode::End) working = conjugate(s);
  if (trace.mode == IterationMode::Fixed) working = symmetrize(s);
  SequencePrefix pts;
  pts.reserve(trace.steps.size() + 1);
  for (const auto& st : trace.steps) pts.push_back(st.x);
  pts.push_back(trace.final_x);
  report.cauchy = classify_cauchy(working, pts, opts.cauchy_tol, {opts.tail_fraction});
  return report;
}

}  // namespace qpm
