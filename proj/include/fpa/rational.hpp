#ifndef FPA_RATIONAL_HPP
#define FPA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace fpa {

// Exact arbitrary-precision rational.  All algebra-core coefficients use
// this type; doubles appear only at the simulation / analysis boundary.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline double to_double(const Rat& q) { return q.get_d(); }

inline Rat rat_abs(const Rat& q) { return abs(q); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

inline Rat factorial(unsigned long n) {
  Rat out;
  mpz_fac_ui(out.get_num_mpz_t(), n);
  return out;
}

// Canonical text form: "p/q", or just "p" when q == 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace fpa

#endif
