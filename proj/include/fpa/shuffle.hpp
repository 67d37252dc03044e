#ifndef FPA_SHUFFLE_HPP
#define FPA_SHUFFLE_HPP

#include <cstdint>
#include <map>
#include <utility>

#include "fpa/nc_series.hpp"

namespace fpa {

// w1 shuffled with w2 as a multiset of words.  Multiplicities fit easily in
// 64 bits at the truncation degrees this library targets.
using WordMultiset = std::map<Word, std::int64_t>;

// Memo for word-pair shuffles.  Confine one instance to one evaluation
// context; the algebra operations create their own internally.
class ShuffleCache {
 public:
  const WordMultiset& shuffle_words(const Word& a, const Word& b);

 private:
  std::map<std::pair<Word, Word>, WordMultiset> memo_;
};

// Bilinear extension of the word shuffle, componentwise on matching shapes,
// exact on all words of length <= N.
NCSeries shuffle(const NCSeries& a, const NCSeries& b, int N);
NCSeries shuffle(const NCSeries& a, const NCSeries& b, int N,
                 ShuffleCache& cache);

// c^{shuffle k}; k = 0 gives the constant series 1.
NCSeries shuffle_power(const NCSeries& c, int k, int N);

// sum_{k>=0} c^{shuffle k} for proper c; terms with k > N vanish below
// degree N+1, so the truncated sum is finite and exact.
NCSeries shuffle_star(const NCSeries& c, int N);

// Shuffle-group inverse of a series with unit (nonzero) constant terms,
// componentwise: c_i^{-1} = (c_i,e)^{-1} (1 - c_i/(c_i,e))^{shuffle *}.
NCSeries shuffle_inverse(const NCSeries& c, int N);

}  // namespace fpa

#endif
