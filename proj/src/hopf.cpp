#include "fpa/hopf.hpp"

#include <algorithm>

#include "fpa/errors.hpp"

namespace fpa {

namespace {

// subword of w at the positions selected by mask
Word masked_subword(const Word& w, std::uint32_t mask) {
  std::vector<std::uint8_t> letters;
  for (int i = 0; i < w.length(); ++i)
    if (mask & (1u << i)) letters.push_back(w.at(i));
  return Word(std::move(letters));
}

void require_single_component(const NCSeries& c, const char* who) {
  if (c.components() != 1)
    throw ShapeError(std::string(who) + " requires a single-component series");
}

}  // namespace

std::vector<TensorTerm> partition_map(const Word& w, int cap) {
  if (w.length() > cap)
    throw DomainError("partition_map: word length " +
                      std::to_string(w.length()) +
                      " exceeds materialization cap " + std::to_string(cap));
  std::map<std::pair<Word, Word>, std::int64_t> acc;
  const std::uint32_t full = (w.length() == 0) ? 0u : ((1u << w.length()) - 1u);
  for (std::uint32_t mask = 0;; ++mask) {
    acc[{masked_subword(w, mask), masked_subword(w, full & ~mask)}] += 1;
    if (mask == full) break;
  }
  std::vector<TensorTerm> out;
  out.reserve(acc.size());
  for (const auto& [pair, mult] : acc)
    out.push_back({pair.first, pair.second, mult});
  return out;
}

RatVec coproduct_eval_vec(const Word& w, const NCSeries& c,
                          const NCSeries& d) {
  if (c.components() != d.components())
    throw ShapeError("coproduct_eval: component mismatch");
  if (w.length() > c.maxdeg() || w.length() > d.maxdeg())
    throw DegreeError("coproduct_eval: word exceeds truncation degree");
  const int l = c.components();
  RatVec out(static_cast<std::size_t>(l));
  const std::uint32_t full = (w.length() == 0) ? 0u : ((1u << w.length()) - 1u);
  // streams the splits; small words could equally use partition_map()
  for (std::uint32_t mask = 0;; ++mask) {
    const Word left = masked_subword(w, mask);
    const Word right = masked_subword(w, full & ~mask);
    for (int i = 0; i < l; ++i) {
      const Rat& a = c.coeff(left, i);
      if (!is_zero(a)) out[static_cast<std::size_t>(i)] += a * d.coeff(right, i);
    }
    if (mask == full) break;
  }
  return out;
}

Rat coproduct_eval(const Word& w, const NCSeries& c, const NCSeries& d) {
  require_single_component(c, "coproduct_eval");
  require_single_component(d, "coproduct_eval");
  return coproduct_eval_vec(w, c, d)[0];
}

Rat reduced_coproduct_eval(const Word& w, const NCSeries& c,
                           const NCSeries& d) {
  if (w.is_empty()) return Rat(0);
  return coproduct_eval(w, c, d) - c.coeff(w) - d.coeff(w);
}

Rat antipode_eval(const Word& w, const NCSeries& c, AntipodeMemo& memo) {
  require_single_component(c, "antipode_eval");
  if (c.coeff(Word::empty()) != 1)
    throw DomainError("antipode_eval requires unit constant term");
  if (w.is_empty()) return Rat(1);
  auto it = memo.values.find(w);
  if (it != memo.values.end()) return it->second;

  // S(a_w) = -a_w - sum over splits with both parts nonempty of
  // a_{w_(1)} * S(a_{w_(2)})
  Rat s = -c.coeff(w);
  const std::uint32_t full = (1u << w.length()) - 1u;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const Word left = masked_subword(w, mask);
    const Rat& a = c.coeff(left);
    if (is_zero(a)) continue;
    s -= a * antipode_eval(masked_subword(w, full & ~mask), c, memo);
  }
  memo.values.emplace(w, s);
  return s;
}

NCSeries shuffle_inverse_antipode(const NCSeries& c, int N) {
  if (c.maxdeg() < N)
    throw DegreeError("shuffle_inverse: operand not exact to requested degree");
  NCSeries out(c.alphabet(), c.components(), N);
  const auto words = enumerate_words_upto(c.alphabet(), N);
  for (int i = 0; i < c.components(); ++i) {
    const Rat r = c.coeff(Word::empty(), i);
    if (is_zero(r))
      throw DomainError("shuffle_inverse: proper component " +
                        std::to_string(i) + " is not invertible");
    NCSeries unit = scale(Rat(1) / r, c.component(i).truncated(N));
    AntipodeMemo memo;
    for (const auto& w : words)
      out.set_coeff(w, i, antipode_eval(w, unit, memo) / r);
  }
  return out;
}

namespace {

// sum over ordered splits of `rem` into parts for letters[part...]; each
// part picks a subword (nonempty unless allow_empty), the rest recurses.
Rat split_sum(const Word& rem, const std::vector<int>& letters,
              std::size_t part, const NCSeries& c, bool allow_empty) {
  const int needed = static_cast<int>(letters.size() - part);
  if (part + 1 == letters.size()) {
    if (!allow_empty && rem.is_empty()) return Rat(0);
    return c.coeff(rem, letters[part]);
  }
  if (!allow_empty && rem.length() < needed) return Rat(0);
  Rat total = 0;
  const std::uint32_t full =
      (rem.length() == 0) ? 0u : ((1u << rem.length()) - 1u);
  for (std::uint32_t mask = 0;; ++mask) {
    const bool empty_part = (mask == 0);
    if (!(empty_part && !allow_empty)) {
      const Word part_word = masked_subword(rem, mask);
      const Rat& a = c.coeff(part_word, letters[part]);
      if (!is_zero(a)) {
        Rat tail = split_sum(masked_subword(rem, full & ~mask), letters,
                             part + 1, c, allow_empty);
        total += a * tail;
      }
    }
    if (mask == full) break;
  }
  return total;
}

std::vector<int> monomial_letters(const CommMonomial& eta) {
  std::vector<int> letters;
  for (int i = 0; i < eta.vars(); ++i)
    for (int k = 0; k < eta.exponents[static_cast<std::size_t>(i)]; ++k)
      letters.push_back(i);
  return letters;
}

}  // namespace

Rat chi_eval(const CommMonomial& eta, const Word& w, const NCSeries& c) {
  if (eta.vars() != c.components())
    throw ShapeError("chi_eval: monomial variables must match components");
  if (!c.is_proper()) throw DomainError("chi_eval requires a proper series");
  const auto letters = monomial_letters(eta);
  if (letters.empty()) throw DomainError("chi_eval requires |eta| >= 1");
  if (w.length() > c.maxdeg())
    throw DegreeError("chi_eval: word exceeds truncation degree");
  return split_sum(w, letters, 0, c, /*allow_empty=*/false);
}

Rat chi_hat_eval(const CommMonomial& eta, const Word& w, const NCSeries& c) {
  if (eta.vars() != c.components())
    throw ShapeError("chi_hat_eval: monomial variables must match components");
  const auto letters = monomial_letters(eta);
  if (letters.empty()) throw DomainError("chi_hat_eval requires |eta| >= 1");
  if (w.length() > c.maxdeg())
    throw DegreeError("chi_hat_eval: word exceeds truncation degree");
  // normalize each component to unit constant term, rescale at the end
  RatVec units(static_cast<std::size_t>(c.components()));
  for (int i = 0; i < c.components(); ++i) {
    units[static_cast<std::size_t>(i)] = c.coeff(Word::empty(), i);
    if (is_zero(units[static_cast<std::size_t>(i)]))
      throw DomainError("chi_hat_eval: zero constant term in component " +
                        std::to_string(i));
  }
  NCSeries normalized(c.alphabet(), c.components(), c.maxdeg());
  for (const auto& [word, v] : c.terms()) {
    RatVec scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = v[i] / units[i];
    normalized.set_coeff(word, scaled);
  }
  Rat prefactor = 1;
  for (int letter : letters)
    prefactor *= units[static_cast<std::size_t>(letter)];
  return prefactor * split_sum(w, letters, 0, normalized, /*allow_empty=*/true);
}

}  // namespace fpa
