#ifndef FPA_COMM_SERIES_HPP
#define FPA_COMM_SERIES_HPP

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpa/rational.hpp"

namespace fpa {

// Monomial over the commuting alphabet {x~1, ..., x~l}: an exponent vector.
// Ordered by total degree, then lexicographically.
struct CommMonomial {
  std::vector<int> exponents;

  CommMonomial() = default;
  explicit CommMonomial(std::vector<int> e) : exponents(std::move(e)) {}
  static CommMonomial unit(int vars) {
    return CommMonomial(std::vector<int>(static_cast<std::size_t>(vars), 0));
  }
  static CommMonomial variable(int vars, int i, int power = 1) {
    CommMonomial m = unit(vars);
    m.exponents[static_cast<std::size_t>(i)] = power;
    return m;
  }

  int vars() const { return static_cast<int>(exponents.size()); }
  int degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
  }

  friend bool operator<(const CommMonomial& a, const CommMonomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents < b.exponents;
  }
  friend bool operator==(const CommMonomial&, const CommMonomial&) = default;

  std::string str() const;  // "2,0,1"
};

// Truncated commutative series d over {x~1,...,x~l} with `components` output
// rows.  maxdeg == kPolynomial marks an exact polynomial: coefficients are
// known (zero) at every degree beyond the stored support.  Otherwise the
// same truncation contract as NCSeries applies.
class CommSeries {
 public:
  static constexpr int kPolynomial = std::numeric_limits<int>::max();

  CommSeries(int vars, int components, int maxdeg);

  int vars() const { return vars_; }
  int components() const { return components_; }
  int maxdeg() const { return maxdeg_; }
  bool is_polynomial() const { return maxdeg_ == kPolynomial; }

  bool same_shape(const CommSeries& o) const {
    return vars_ == o.vars_ && components_ == o.components_ &&
           maxdeg_ == o.maxdeg_;
  }

  const Rat& coeff(const CommMonomial& mono, int i = 0) const;
  void set_coeff(const CommMonomial& mono, int i, const Rat& v);
  void set_coeff(const CommMonomial& mono, const RatVec& v);

  const std::map<CommMonomial, RatVec>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  // highest stored degree (0 for the zero series)
  int support_degree() const;

  // order of the proper part d - (d,0); nullopt for constant series
  std::optional<int> proper_order() const;

  friend bool operator==(const CommSeries& a, const CommSeries& b);

 private:
  void check_monomial(const CommMonomial& mono) const;
  int vars_;
  int components_;
  int maxdeg_;
  std::map<CommMonomial, RatVec> terms_;
};

CommSeries add(const CommSeries& a, const CommSeries& b);
CommSeries scale(const Rat& alpha, const CommSeries& c);
CommSeries negate(const CommSeries& c);

std::string to_string(const CommSeries& c);

}  // namespace fpa

#endif
