#include "fpa/shuffle.hpp"

#include "fpa/errors.hpp"

namespace fpa {

const WordMultiset& ShuffleCache::shuffle_words(const Word& a, const Word& b) {
  const Word& u = (b < a) ? b : a;  // shuffle is commutative
  const Word& v = (b < a) ? a : b;
  auto key = std::make_pair(u, v);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  WordMultiset out;
  if (u.is_empty()) {
    out[v] = 1;
  } else if (v.is_empty()) {
    out[u] = 1;
  } else {
    const auto& left = shuffle_words(u.suffix(1), v);
    for (const auto& [w, mult] : left) out[w.prepend(u.at(0))] += mult;
    const auto& right = shuffle_words(u, v.suffix(1));
    for (const auto& [w, mult] : right) out[w.prepend(v.at(0))] += mult;
  }
  return memo_.emplace(std::move(key), std::move(out)).first->second;
}

NCSeries shuffle(const NCSeries& a, const NCSeries& b, int N,
                 ShuffleCache& cache) {
  if (a.alphabet() != b.alphabet() || a.components() != b.components())
    throw ShapeError("shuffle: shape mismatch");
  if (a.maxdeg() < N || b.maxdeg() < N)
    throw DegreeError("shuffle: operands not exact to requested degree");
  NCSeries out(a.alphabet(), a.components(), N);
  for (const auto& [wa, va] : a.terms()) {
    if (wa.length() > N) continue;
    for (const auto& [wb, vb] : b.terms()) {
      if (wa.length() + wb.length() > N) continue;
      RatVec prod(va.size());
      bool nonzero = false;
      for (std::size_t i = 0; i < va.size(); ++i) {
        prod[i] = va[i] * vb[i];
        nonzero = nonzero || !is_zero(prod[i]);
      }
      if (!nonzero) continue;
      for (const auto& [w, mult] : cache.shuffle_words(wa, wb)) {
        for (std::size_t i = 0; i < prod.size(); ++i)
          out.add_to_coeff(w, static_cast<int>(i), prod[i] * mult);
      }
    }
  }
  return out;
}

NCSeries shuffle(const NCSeries& a, const NCSeries& b, int N) {
  ShuffleCache cache;
  return shuffle(a, b, N, cache);
}

NCSeries shuffle_power(const NCSeries& c, int k, int N) {
  if (k < 0) throw DomainError("shuffle_power requires k >= 0");
  if (c.maxdeg() < N)
    throw DegreeError("shuffle_power: operand not exact to requested degree");
  ShuffleCache cache;
  NCSeries out = one_series(c.alphabet(), c.components(), N);
  for (int i = 0; i < k; ++i) out = shuffle(out, c.truncated(N), N, cache);
  return out;
}

NCSeries shuffle_star(const NCSeries& c, int N) {
  if (!c.is_proper())
    throw DomainError("shuffle_star requires a proper series");
  if (c.maxdeg() < N)
    throw DegreeError("shuffle_star: operand not exact to requested degree");
  ShuffleCache cache;
  NCSeries trunc = c.truncated(N);
  NCSeries out = one_series(c.alphabet(), c.components(), N);
  NCSeries power = out;
  for (int k = 1; k <= N; ++k) {  // ord(c^{shuffle k}) >= k
    power = shuffle(power, trunc, N, cache);
    out = add(out, power);
  }
  return out;
}

NCSeries shuffle_inverse(const NCSeries& c, int N) {
  if (c.maxdeg() < N)
    throw DegreeError("shuffle_inverse: operand not exact to requested degree");
  NCSeries out(c.alphabet(), c.components(), N);
  for (int i = 0; i < c.components(); ++i) {
    const Rat r = c.coeff(Word::empty(), i);
    if (is_zero(r))
      throw DomainError("shuffle_inverse: proper component " +
                        std::to_string(i) + " is not invertible");
    // c' = 1 - c_i/r, proper by construction
    NCSeries cp = scale(rat(-1) / r, c.component(i).truncated(N));
    cp.add_to_coeff(Word::empty(), 0, Rat(1));
    NCSeries inv = scale(Rat(1) / r, shuffle_star(cp, N));
    for (const auto& [w, v] : inv.terms()) out.set_coeff(w, i, v[0]);
  }
  return out;
}

}  // namespace fpa
