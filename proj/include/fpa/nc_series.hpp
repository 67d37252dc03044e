#ifndef FPA_NC_SERIES_HPP
#define FPA_NC_SERIES_HPP

#include <map>
#include <optional>
#include <string>

#include "fpa/rational.hpp"
#include "fpa/words.hpp"

namespace fpa {

// Truncated noncommutative formal power series c: X* -> Q^l, exact on all
// words of length <= maxdeg.  Coefficients of longer words are undefined
// under the truncation contract, never silently zero; requesting one throws
// DegreeError.  Absent entries of stored words are exact zeros.
class NCSeries {
 public:
  NCSeries(Alphabet alphabet, int components, int maxdeg);

  const Alphabet& alphabet() const { return alphabet_; }
  int m() const { return alphabet_.m; }
  int components() const { return components_; }
  int maxdeg() const { return maxdeg_; }

  bool same_shape(const NCSeries& o) const {
    return alphabet_ == o.alphabet_ && components_ == o.components_ &&
           maxdeg_ == o.maxdeg_;
  }

  // (c, w)_i ; exact zero when unset
  const Rat& coeff(const Word& w, int i = 0) const;
  RatVec coeff_vec(const Word& w) const;

  void set_coeff(const Word& w, int i, const Rat& v);
  void set_coeff(const Word& w, const RatVec& v);
  void add_to_coeff(const Word& w, int i, const Rat& v);

  // stored terms, length-lex order; zero entries may appear transiently
  const std::map<Word, RatVec>& terms() const { return terms_; }

  // drops exactly-zero coefficient vectors
  void prune();

  bool is_zero() const;

  // min word length in the support; nullopt encodes +infinity (zero series)
  std::optional<int> order() const;

  bool is_proper() const;

  NCSeries component(int i) const;

  // reinterpret/retruncate to a smaller maxdeg (exactness preserved)
  NCSeries truncated(int maxdeg) const;

  friend bool operator==(const NCSeries& a, const NCSeries& b);

 private:
  void check_word(const Word& w) const;
  Alphabet alphabet_;
  int components_;
  int maxdeg_;
  std::map<Word, RatVec> terms_;
};

NCSeries add(const NCSeries& a, const NCSeries& b);
NCSeries sub(const NCSeries& a, const NCSeries& b);
NCSeries scale(const Rat& alpha, const NCSeries& c);
NCSeries negate(const NCSeries& c);

bool is_proper(const NCSeries& c);
NCSeries proper_part(const NCSeries& c);

// subseries supported on pure x0 powers (zero-input part)
NCSeries natural_part(const NCSeries& c);

std::optional<int> order(const NCSeries& c);

// kappa(c, d) = sigma^{ord(c-d)}, 0 when c = d up to the truncation degree.
Rat ultrametric(const NCSeries& c, const NCSeries& d, const Rat& sigma);

// single-word builders
NCSeries monomial_series(const Alphabet& a, int components, int maxdeg,
                         const Word& w, const RatVec& coeff);
NCSeries one_series(const Alphabet& a, int components, int maxdeg);
NCSeries zero_series(const Alphabet& a, int components, int maxdeg);

std::string to_string(const NCSeries& c);

}  // namespace fpa

#endif
