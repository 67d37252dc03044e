#ifndef FPA_COMPOSE_HPP
#define FPA_COMPOSE_HPP

#include "fpa/comm_series.hpp"
#include "fpa/nc_series.hpp"

namespace fpa {

// delta + base, the generating "series" of a unital Fliess operator.
// delta stays symbolic: it never enters a coefficient map.
struct UnitalSeries {
  NCSeries base;
};

UnitalSeries delta(const Alphabet& a, int N);          // identity element
UnitalSeries delta_plus(const NCSeries& base);          // delta + base

// Cascade product c o d = sum (c, eta) psi_d(eta)(1), where
// psi_d(x_i)(e) = x0 (d_i shuffle e) and d_0 = 1.  c is over an alphabet of
// m+1 letters matching the m components of d.
NCSeries compose(const NCSeries& c, const NCSeries& d, int N);

// Mixed product c o~ d_delta = sum (c, eta) phi_d(eta)(1), where
// phi_d(x_i)(e) = x_i e + x0 (d_i shuffle e) and d_0 = 0.
NCSeries mixed_compose(const NCSeries& c, const UnitalSeries& d_delta, int N);

// Output feedback group on m-component series over X, |X| = m+1:
// c (.) d = d + c o~ d_delta, neutral element 0 (i.e. delta upstairs).
NCSeries group_product(const NCSeries& c, const NCSeries& d, int N);
UnitalSeries unital_compose(const UnitalSeries& c_delta,
                            const UnitalSeries& d_delta, int N);

// Group inverse: the unique w with c (.) w = 0, found by iterating the
// strong contraction w <- -(c o~ w_delta); stabilizes within N+1 steps.
NCSeries group_inverse(const NCSeries& c, int N);

// Wiener-Fliess composition d o` c = sum (d, eta~) c^{shuffle eta~}.
// Admissible when c is proper or d is a polynomial; direct summation route.
NCSeries wf_compose(const CommSeries& d, const NCSeries& c, int N);

// Same product evaluated through the chi / chi-hat operators of the shuffle
// Hopf algebra; cross-check path for wf_compose.
NCSeries wf_compose_via_chi(const CommSeries& d, const NCSeries& c, int N);

bool wf_admissible(const CommSeries& d, const NCSeries& c);

// (alpha d + e) o` c  ==  alpha (d o` c) + (e o` c), exact verdict.
bool wf_left_linearity_check(const CommSeries& d, const CommSeries& e,
                             const Rat& alpha, const NCSeries& c, int N);

// d o` (c o~ e_delta)  ==  (d o` c) o~ e_delta, exact verdict.
bool wf_mixed_associativity_check(const CommSeries& d, const NCSeries& c,
                                  const NCSeries& e, int N);

}  // namespace fpa

#endif
