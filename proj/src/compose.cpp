#include "fpa/compose.hpp"

#include <set>

#include "fpa/errors.hpp"
#include "fpa/hopf.hpp"
#include "fpa/shuffle.hpp"

namespace fpa {

namespace {

// x0 * e, exact up to N (degree-(N) terms of e fall off the truncation)
NCSeries prepend_x0(const NCSeries& e, int N) {
  NCSeries out(e.alphabet(), e.components(), N);
  for (const auto& [w, v] : e.terms()) {
    if (w.length() + 1 > N) continue;
    out.set_coeff(w.prepend(0), v);
  }
  return out;
}

NCSeries prepend_letter(int letter, const NCSeries& e, int N) {
  NCSeries out(e.alphabet(), e.components(), N);
  for (const auto& [w, v] : e.terms()) {
    if (w.length() + 1 > N) continue;
    out.set_coeff(w.prepend(letter), v);
  }
  return out;
}

// suffixes of every support word of c with length <= N, plus the empty word,
// ordered by length so each map entry can be built from its parent suffix
std::set<Word> support_suffixes(const NCSeries& c, int N) {
  std::set<Word> suffixes;
  suffixes.insert(Word::empty());
  for (const auto& [w, v] : c.terms()) {
    if (w.length() > N) continue;
    for (int k = 0; k <= w.length(); ++k) suffixes.insert(w.suffix(k));
  }
  return suffixes;
}

}  // namespace

UnitalSeries delta(const Alphabet& a, int N) {
  return UnitalSeries{zero_series(a, a.m, N)};
}

UnitalSeries delta_plus(const NCSeries& base) {
  if (base.components() != base.alphabet().m)
    throw ShapeError("unital series requires m components over m+1 letters");
  return UnitalSeries{base};
}

NCSeries compose(const NCSeries& c, const NCSeries& d, int N) {
  if (c.m() != d.components())
    throw ShapeError("compose: alphabet arity of c must match components of d");
  if (c.maxdeg() < N || d.maxdeg() < N)
    throw DegreeError("compose: operands not exact to requested degree");

  ShuffleCache cache;
  const NCSeries one = one_series(d.alphabet(), 1, N);
  // psi_d(suffix)(1), built from shortest suffix up;
  // ord(psi_d(eta)(1)) >= |eta| keeps the truncated sum exact
  std::map<Word, NCSeries> psi;
  psi.emplace(Word::empty(), one);
  for (const auto& s : support_suffixes(c, N)) {
    if (s.is_empty()) continue;
    const int letter = s.at(0);
    const NCSeries& inner = psi.at(s.suffix(1));
    NCSeries shuffled =
        (letter == 0) ? inner
                      : shuffle(d.component(letter - 1).truncated(N), inner, N,
                                cache);
    psi.emplace(s, prepend_x0(shuffled, N));
  }

  NCSeries out(d.alphabet(), c.components(), N);
  for (const auto& [eta, v] : c.terms()) {
    if (eta.length() > N) continue;
    const NCSeries& term = psi.at(eta);
    for (const auto& [w, tv] : term.terms())
      for (int i = 0; i < c.components(); ++i) {
        const Rat& coeff = v[static_cast<std::size_t>(i)];
        if (!is_zero(coeff)) out.add_to_coeff(w, i, coeff * tv[0]);
      }
  }
  out.prune();
  return out;
}

NCSeries mixed_compose(const NCSeries& c, const UnitalSeries& d_delta, int N) {
  const NCSeries& d = d_delta.base;
  if (c.alphabet() != d.alphabet())
    throw ShapeError("mixed_compose: alphabets must match");
  if (c.maxdeg() < N || d.maxdeg() < N)
    throw DegreeError("mixed_compose: operands not exact to requested degree");

  ShuffleCache cache;
  // phi_d(suffix)(1); phi adds at least one letter per application
  std::map<Word, NCSeries> phi;
  phi.emplace(Word::empty(), one_series(c.alphabet(), 1, N));
  for (const auto& s : support_suffixes(c, N)) {
    if (s.is_empty()) continue;
    const int letter = s.at(0);
    const NCSeries& inner = phi.at(s.suffix(1));
    NCSeries value = prepend_letter(letter, inner, N);
    if (letter > 0) {
      NCSeries shuffled =
          shuffle(d.component(letter - 1).truncated(N), inner, N, cache);
      value = add(value, prepend_x0(shuffled, N));
    }
    phi.emplace(s, std::move(value));
  }

  NCSeries out(c.alphabet(), c.components(), N);
  for (const auto& [eta, v] : c.terms()) {
    if (eta.length() > N) continue;
    const NCSeries& term = phi.at(eta);
    for (const auto& [w, tv] : term.terms())
      for (int i = 0; i < c.components(); ++i) {
        const Rat& coeff = v[static_cast<std::size_t>(i)];
        if (!is_zero(coeff)) out.add_to_coeff(w, i, coeff * tv[0]);
      }
  }
  out.prune();
  return out;
}

NCSeries group_product(const NCSeries& c, const NCSeries& d, int N) {
  if (!c.same_shape(d)) throw ShapeError("group_product: shape mismatch");
  if (c.components() != c.alphabet().m)
    throw ShapeError("group_product requires m components over m+1 letters");
  return add(d.truncated(N), mixed_compose(c, delta_plus(d), N));
}

UnitalSeries unital_compose(const UnitalSeries& c_delta,
                            const UnitalSeries& d_delta, int N) {
  return UnitalSeries{group_product(c_delta.base, d_delta.base, N)};
}

NCSeries group_inverse(const NCSeries& c, int N) {
  if (c.components() != c.alphabet().m)
    throw ShapeError("group_inverse requires m components over m+1 letters");
  if (c.maxdeg() < N)
    throw DegreeError("group_inverse: operand not exact to requested degree");
  NCSeries w = negate(c.truncated(N));
  for (int iter = 0; iter <= N + 1; ++iter) {
    NCSeries next = negate(mixed_compose(c, delta_plus(w), N));
    if (next == w) return w;
    w = std::move(next);
  }
  throw NoConvergenceError(
      "group_inverse failed to stabilize within N+1 iterations");
}

bool wf_admissible(const CommSeries& d, const NCSeries& c) {
  return c.is_proper() || d.is_polynomial();
}

namespace {

void wf_check_shapes(const CommSeries& d, const NCSeries& c, int N) {
  if (d.vars() != c.components())
    throw ShapeError("wf_compose: d needs one variable per component of c");
  if (c.maxdeg() < N)
    throw DegreeError("wf_compose: c not exact to requested degree");
  if (!wf_admissible(d, c))
    throw AdmissibilityError(
        "wf_compose: c non-proper and d not a polynomial");
  // case 1 draws monomials of every degree <= N from d
  if (!d.is_polynomial() && d.maxdeg() < N)
    throw DegreeError("wf_compose: d not exact to requested degree");
}

// monomials the truncated sum ranges over
std::vector<CommMonomial> wf_monomials(const CommSeries& d, int N) {
  std::vector<CommMonomial> out;
  for (const auto& [mono, v] : d.terms()) {
    if (!d.is_polynomial() && mono.degree() > N) continue;
    // proper case: ord(c^{shuffle eta~}) >= |eta~| makes degrees > N vanish
    out.push_back(mono);
  }
  return out;
}

}  // namespace

NCSeries wf_compose(const CommSeries& d, const NCSeries& c, int N) {
  wf_check_shapes(d, c, N);
  const bool proper = c.is_proper();

  ShuffleCache cache;
  std::map<CommMonomial, NCSeries> powers;  // c^{shuffle eta~}
  powers.emplace(CommMonomial::unit(d.vars()),
                 one_series(c.alphabet(), 1, N));
  auto power_of = [&](const CommMonomial& mono, auto&& self) -> const NCSeries& {
    auto it = powers.find(mono);
    if (it != powers.end()) return it->second;
    CommMonomial parent = mono;
    int var = 0;
    for (int i = mono.vars() - 1; i >= 0; --i)
      if (parent.exponents[static_cast<std::size_t>(i)] > 0) {
        var = i;
        --parent.exponents[static_cast<std::size_t>(i)];
        break;
      }
    const NCSeries& base = self(parent, self);
    NCSeries value =
        shuffle(c.component(var).truncated(N), base, N, cache);
    return powers.emplace(mono, std::move(value)).first->second;
  };

  NCSeries out(c.alphabet(), d.components(), N);
  for (const auto& mono : wf_monomials(d, N)) {
    if (proper && mono.degree() > N) continue;
    const NCSeries& pw = power_of(mono, power_of);
    for (int i = 0; i < d.components(); ++i) {
      const Rat& coeff = d.coeff(mono, i);
      if (is_zero(coeff)) continue;
      for (const auto& [w, v] : pw.terms())
        out.add_to_coeff(w, i, coeff * v[0]);
    }
  }
  out.prune();
  return out;
}

NCSeries wf_compose_via_chi(const CommSeries& d, const NCSeries& c, int N) {
  wf_check_shapes(d, c, N);
  const bool proper = c.is_proper();
  const auto words = enumerate_words_upto(c.alphabet(), N);

  NCSeries out(c.alphabet(), d.components(), N);
  const CommMonomial unit = CommMonomial::unit(d.vars());
  for (int i = 0; i < d.components(); ++i) {
    // (d, empty) epsilon term
    const Rat& constant = d.coeff(unit, i);
    if (!is_zero(constant)) out.add_to_coeff(Word::empty(), i, constant);
    for (const auto& mono : wf_monomials(d, N)) {
      if (mono.degree() == 0) continue;
      if (proper && mono.degree() > N) continue;
      const Rat& coeff = d.coeff(mono, i);
      if (is_zero(coeff)) continue;
      for (const auto& w : words) {
        Rat value = proper ? chi_eval(mono, w, c) : chi_hat_eval(mono, w, c);
        if (!is_zero(value)) out.add_to_coeff(w, i, coeff * value);
      }
    }
  }
  out.prune();
  return out;
}

bool wf_left_linearity_check(const CommSeries& d, const CommSeries& e,
                             const Rat& alpha, const NCSeries& c, int N) {
  CommSeries lhs_series = add(scale(alpha, d), e);
  NCSeries lhs = wf_compose(lhs_series, c, N);
  NCSeries rhs =
      add(scale(alpha, wf_compose(d, c, N)), wf_compose(e, c, N));
  return lhs == rhs;
}

bool wf_mixed_associativity_check(const CommSeries& d, const NCSeries& c,
                                  const NCSeries& e, int N) {
  UnitalSeries e_delta = delta_plus(e.truncated(N));
  NCSeries lhs = wf_compose(d, mixed_compose(c, e_delta, N), N);
  NCSeries rhs = mixed_compose(wf_compose(d, c, N), e_delta, N);
  return lhs == rhs;
}

}  // namespace fpa
