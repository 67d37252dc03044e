#ifndef FPA_FEEDBACK_HPP
#define FPA_FEEDBACK_HPP

#include <optional>
#include <vector>

#include "fpa/compose.hpp"

namespace fpa {

// Plant + additive static output feedback map.  Admissible when the plant
// is proper or the static map is a polynomial.
struct FeedbackProblem {
  NCSeries plant;        // l components over X, |X| = m+1
  CommSeries static_map; // m components in l variables
  int maxdeg;

  bool admissible() const {
    return plant.is_proper() || static_map.is_polynomial();
  }
};

// Dynamic feedback product c@d = c o~ (-d o c)_delta^{o -1}.
NCSeries dynamic_feedback(const NCSeries& c, const NCSeries& d, int N);

// Wiener-Fliess feedback product c@^d = c o~ (-d o` c)_delta^{o -1}.
NCSeries static_feedback(const FeedbackProblem& problem);

// Fixed-point route: e <- c o~ (d o` e)_delta from e = c; the strong
// contraction stabilizes the truncation within N+1 iterations and the limit
// equals static_feedback exactly.
struct FixedPointTrace {
  NCSeries result;
  int iterations = 0;
  // ord(e_{k+1} - e_k) per step; nullopt marks the stabilizing (equal) step
  std::vector<std::optional<int>> step_orders;
};

FixedPointTrace static_feedback_fixed_point(const FeedbackProblem& problem);

// (c@^d1)@^d2 == c@^(d1+d2), exact verdict.
bool group_action_check(const NCSeries& c, const CommSeries& d1,
                        const CommSeries& d2, int N);

// SISO: relative degree of c@^d equals that of c whenever defined.
bool feedback_relative_degree_check(const NCSeries& c, const CommSeries& d,
                                    int N);

}  // namespace fpa

#endif
