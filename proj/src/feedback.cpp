#include "fpa/feedback.hpp"

#include "fpa/convergence.hpp"
#include "fpa/errors.hpp"

namespace fpa {

NCSeries dynamic_feedback(const NCSeries& c, const NCSeries& d, int N) {
  if (d.alphabet().m != c.components() || d.components() != c.alphabet().m)
    throw ShapeError("dynamic_feedback: arity mismatch between plant and "
                     "feedback series");
  NCSeries dc = compose(d, c, N);
  NCSeries inv = group_inverse(negate(dc), N);
  return mixed_compose(c, delta_plus(inv), N);
}

namespace {

void check_problem(const FeedbackProblem& p) {
  if (p.static_map.vars() != p.plant.components())
    throw ShapeError("static feedback: map needs one variable per output");
  if (p.static_map.components() != p.plant.alphabet().m)
    throw ShapeError("static feedback: map needs one component per input");
  if (!p.admissible())
    throw AdmissibilityError(
        "static feedback: plant non-proper and map not a polynomial");
}

}  // namespace

NCSeries static_feedback(const FeedbackProblem& problem) {
  check_problem(problem);
  const int N = problem.maxdeg;
  NCSeries wf = wf_compose(problem.static_map, problem.plant, N);
  NCSeries inv = group_inverse(negate(wf), N);
  return mixed_compose(problem.plant, delta_plus(inv), N);
}

FixedPointTrace static_feedback_fixed_point(const FeedbackProblem& problem) {
  check_problem(problem);
  const int N = problem.maxdeg;
  const NCSeries& c = problem.plant;

  FixedPointTrace trace{c.truncated(N), 0, {}};
  for (int iter = 0; iter <= N + 1; ++iter) {
    NCSeries fed = wf_compose(problem.static_map, trace.result, N);
    NCSeries next = mixed_compose(c, delta_plus(fed), N);
    ++trace.iterations;
    auto delta_ord = sub(next, trace.result).order();
    trace.step_orders.push_back(delta_ord);
    if (!delta_ord) {  // stabilized: iterates equal on every word <= N
      trace.result = std::move(next);
      return trace;
    }
    trace.result = std::move(next);
  }
  throw NoConvergenceError(
      "static_feedback_fixed_point failed to stabilize within N+1 "
      "iterations");
}

bool group_action_check(const NCSeries& c, const CommSeries& d1,
                        const CommSeries& d2, int N) {
  NCSeries once = static_feedback({c, d1, N});
  NCSeries lhs = static_feedback({once, d2, N});
  NCSeries rhs = static_feedback({c, add(d1, d2), N});
  return lhs == rhs;
}

bool feedback_relative_degree_check(const NCSeries& c, const CommSeries& d,
                                    int N) {
  if (c.alphabet().m != 1 || c.components() != 1 || d.vars() != 1)
    throw ShapeError("feedback_relative_degree_check is SISO only");
  auto before = relative_degree(c, std::min(N, c.maxdeg()));
  if (!before.defined) return true;  // nothing to preserve
  NCSeries closed = static_feedback({c, d, N});
  auto after = relative_degree(closed, N);
  return after.defined && after.r == before.r;
}

}  // namespace fpa
