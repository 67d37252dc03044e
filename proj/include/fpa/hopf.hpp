#ifndef FPA_HOPF_HPP
#define FPA_HOPF_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "fpa/comm_series.hpp"
#include "fpa/nc_series.hpp"

namespace fpa {

// One Sweedler term of the partition map mu(w) = sum w_(1) (x) w_(2).
struct TensorTerm {
  Word left;
  Word right;
  std::int64_t mult;
};

// Sweedler sum with total multiplicity 2^{|w|}; the pairs are the
// complementary subword splits of w.  Materialization is capped; longer
// words are handled by the streaming evaluators below.
std::vector<TensorTerm> partition_map(const Word& w, int cap = 16);

// Delta a_w(c, d) = sum (c, w_(1)) (d, w_(2)), which equals (c shuffle d, w).
// An independent code path from shuffle(); the two must agree.
Rat coproduct_eval(const Word& w, const NCSeries& c, const NCSeries& d);
RatVec coproduct_eval_vec(const Word& w, const NCSeries& c, const NCSeries& d);

// Delta' a_w(c, d) = Delta a_w(c, d) - (c, w) - (d, w); zero on the empty
// word.  For proper c, d this equals (c shuffle d, w) on nonempty words.
Rat reduced_coproduct_eval(const Word& w, const NCSeries& c,
                           const NCSeries& d);

// Memoized antipode values S(a_w)(c) for one fixed series c.
struct AntipodeMemo {
  std::map<Word, Rat> values;
};

// S(a_w)(c) = (c^{shuffle -1}, w) for single-component c with (c, e) = 1.
// Grounded recursion: the reduced-coproduct splits strictly shorten words.
Rat antipode_eval(const Word& w, const NCSeries& c, AntipodeMemo& memo);

// Shuffle-group inverse computed coefficientwise through the antipode
// recursion (normalize to unit constant term, recurse, rescale).  Must agree
// with the geometric-series route in shuffle_inverse().
NCSeries shuffle_inverse_antipode(const NCSeries& c, int N);

// chi_{eta}(a_w)(c) = (c^{shuffle eta}, w) for proper c: sum over ordered
// splits of w into |eta| nonempty subwords.
Rat chi_eval(const CommMonomial& eta, const Word& w, const NCSeries& c);

// chi-hat for c with unit-normalizable components ((c_i, e) != 0 for all i):
// empty subwords allowed, scaled by the product of the constant terms.
Rat chi_hat_eval(const CommMonomial& eta, const Word& w, const NCSeries& c);

}  // namespace fpa

#endif
