#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpmlab/hausdorff.hpp"
#include "qpmlab/sequence.hpp"
#include "qpmlab/variant.hpp"

namespace qpm {

// One successor inequality instance: feasibility requires lhs <= rhs.
struct InequalityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CandidateCheck {
  Point y = 0.0;
  double f_y = 0.0;   // mode functional at y
  double h_xy = 0.0;  // step distance in the mode's working metric
  double slack = 0.0; // min over checks of rhs - lhs
  bool feasible = false;
  std::vector<InequalityCheck> checks;
};

// Every y in Tx with its inequality values; feasibility uses slack >= -tol.
std::vector<CandidateCheck> check_candidates(const Space& s, const SetValuedMap& t, Point x,
                                             const VariantSpec& v, double tol_feas = kFeasTol);

// The feasible subset of check_candidates.
std::vector<CandidateCheck> feasible_successors(const Space& s, const SetValuedMap& t, Point x,
                                                const VariantSpec& v, double tol_feas = kFeasTol);

// Deterministic choice: minimal f(y), ties by minimal step distance, then by
// point order. Throws NoFeasibleSuccessor on an empty list.
const CandidateCheck& select_successor(const std::vector<CandidateCheck>& feasible);

struct SolveOptions {
  double eps = kDefaultEps;
  int max_iter = kDefaultMaxIter;
  double tol_feas = kFeasTol;
  bool first_feasible = false;  // take the first feasible candidate instead
};

enum class Outcome { Converged, HypothesisViolation, MaxIterations };

const char* outcome_name(Outcome o);

struct TraceStep {
  Point x = 0.0;
  double f_x = 0.0;
  double d_n = 0.0;  // step distance H({x_n},{x_{n+1}}) in the working metric
  Point y = 0.0;
  double slack = 0.0;
};

// Witness at a point where no candidate is feasible.
struct StepReport {
  Point x = 0.0;
  double f_x = 0.0;
  std::vector<CandidateCheck> candidates;
};

struct IterationTrace {
  std::vector<TraceStep> steps;
  Outcome outcome = Outcome::MaxIterations;
  Point final_x = 0.0;
  double final_f = 0.0;
  std::optional<StepReport> violation;
  VariantId variant = VariantId::V1;
  IterationMode mode = IterationMode::Start;
  SolveOptions opts;
};

// Mode functional: f_start on d, f_end on d, or f over d^s.
double mode_functional(const Space& s, const SetValuedMap& t, Point x, IterationMode mode);

IterationTrace solve(const Space& s, const SetValuedMap& t, const VariantSpec& v, Point x0,
                     const SolveOptions& opts = {});

// Re-asserts a trace from the inputs alone: successor membership, recorded f
// values within kRecomputeTol, recorded slacks feasible.
struct TraceValidation {
  bool ok = true;
  std::string message;
};
TraceValidation validate_trace(const Space& s, const SetValuedMap& t, const VariantSpec& v,
                               const IterationTrace& trace);

struct DecayReport {
  std::size_t monotone_from = 0;  // first index from which f is non-increasing
  bool monotone_all = false;      // monotone_from == 0
  std::optional<double> q_hat;    // max tail ratio f(x_{n+1})/f(x_n)
  bool dn_bound_ok = false;       // d_n < 2 D_n at every step (zero steps exempt)
  CauchyVerdict cauchy;           // verdict for the visited points
};

struct DecayOptions {
  double tail_fraction = kTailFraction;
  double cauchy_tol = 1e-4;
};

// Requires >= 3 recorded steps and a Converged or MaxIterations outcome.
DecayReport decay_diagnostics(const Space& s, const IterationTrace& trace,
                              const DecayOptions& opts = {});

}  // namespace qpm
