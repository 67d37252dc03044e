#include "fpa/nc_series.hpp"

#include <sstream>

#include "fpa/errors.hpp"

namespace fpa {

namespace {
const Rat kZero = 0;

bool all_zero(const RatVec& v) {
  for (const auto& q : v)
    if (!is_zero(q)) return false;
  return true;
}
}  // namespace

NCSeries::NCSeries(Alphabet alphabet, int components, int maxdeg)
    : alphabet_(alphabet), components_(components), maxdeg_(maxdeg) {
  if (components_ < 1) throw DomainError("series requires components >= 1");
  if (maxdeg_ < 0) throw DomainError("series requires maxdeg >= 0");
}

void NCSeries::check_word(const Word& w) const {
  if (w.length() > maxdeg_)
    throw DegreeError("word " + w.str() + " exceeds truncation degree " +
                      std::to_string(maxdeg_));
  if (!w.fits(alphabet_))
    throw ShapeError("word " + w.str() + " uses letters outside alphabet");
}

const Rat& NCSeries::coeff(const Word& w, int i) const {
  check_word(w);
  if (i < 0 || i >= components_)
    throw ShapeError("component index out of range");
  auto it = terms_.find(w);
  if (it == terms_.end()) return kZero;
  return it->second[static_cast<std::size_t>(i)];
}

RatVec NCSeries::coeff_vec(const Word& w) const {
  check_word(w);
  auto it = terms_.find(w);
  if (it == terms_.end()) return RatVec(static_cast<std::size_t>(components_));
  return it->second;
}

void NCSeries::set_coeff(const Word& w, int i, const Rat& v) {
  check_word(w);
  if (i < 0 || i >= components_)
    throw ShapeError("component index out of range");
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (fpa::is_zero(v)) return;
    RatVec vec(static_cast<std::size_t>(components_));
    vec[static_cast<std::size_t>(i)] = v;
    terms_.emplace(w, std::move(vec));
    return;
  }
  it->second[static_cast<std::size_t>(i)] = v;
  if (all_zero(it->second)) terms_.erase(it);
}

void NCSeries::set_coeff(const Word& w, const RatVec& v) {
  check_word(w);
  if (static_cast<int>(v.size()) != components_)
    throw ShapeError("coefficient vector length mismatch");
  if (all_zero(v)) {
    terms_.erase(w);
    return;
  }
  terms_[w] = v;
}

void NCSeries::add_to_coeff(const Word& w, int i, const Rat& v) {
  if (fpa::is_zero(v)) return;
  check_word(w);
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    RatVec vec(static_cast<std::size_t>(components_));
    vec[static_cast<std::size_t>(i)] = v;
    terms_.emplace(w, std::move(vec));
    return;
  }
  it->second[static_cast<std::size_t>(i)] += v;
  if (all_zero(it->second)) terms_.erase(it);
}

void NCSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (all_zero(it->second))
      it = terms_.erase(it);
    else
      ++it;
  }
}

bool NCSeries::is_zero() const {
  for (const auto& [w, v] : terms_)
    if (!all_zero(v)) return false;
  return true;
}

std::optional<int> NCSeries::order() const {
  for (const auto& [w, v] : terms_)
    if (!all_zero(v)) return w.length();  // map is length-lex ordered
  return std::nullopt;
}

bool NCSeries::is_proper() const {
  auto it = terms_.find(Word::empty());
  return it == terms_.end() || all_zero(it->second);
}

NCSeries NCSeries::component(int i) const {
  if (i < 0 || i >= components_)
    throw ShapeError("component index out of range");
  NCSeries out(alphabet_, 1, maxdeg_);
  for (const auto& [w, v] : terms_)
    out.set_coeff(w, 0, v[static_cast<std::size_t>(i)]);
  return out;
}

NCSeries NCSeries::truncated(int maxdeg) const {
  if (maxdeg > maxdeg_)
    throw DegreeError("cannot extend truncation degree exactly");
  NCSeries out(alphabet_, components_, maxdeg);
  for (const auto& [w, v] : terms_)
    if (w.length() <= maxdeg) out.set_coeff(w, v);
  return out;
}

bool operator==(const NCSeries& a, const NCSeries& b) {
  if (!a.same_shape(b)) return false;
  NCSeries x = a;
  NCSeries y = b;
  x.prune();
  y.prune();
  return x.terms_ == y.terms_;
}

NCSeries add(const NCSeries& a, const NCSeries& b) {
  if (!a.same_shape(b)) throw ShapeError("add: shape mismatch");
  NCSeries out = a;
  for (const auto& [w, v] : b.terms())
    for (int i = 0; i < b.components(); ++i)
      out.add_to_coeff(w, i, v[static_cast<std::size_t>(i)]);
  out.prune();
  return out;
}

NCSeries sub(const NCSeries& a, const NCSeries& b) {
  return add(a, negate(b));
}

NCSeries scale(const Rat& alpha, const NCSeries& c) {
  NCSeries out(c.alphabet(), c.components(), c.maxdeg());
  if (is_zero(alpha)) return out;
  for (const auto& [w, v] : c.terms()) {
    RatVec scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = alpha * v[i];
    out.set_coeff(w, scaled);
  }
  return out;
}

NCSeries negate(const NCSeries& c) { return scale(rat(-1), c); }

bool is_proper(const NCSeries& c) { return c.is_proper(); }

NCSeries proper_part(const NCSeries& c) {
  NCSeries out = c;
  out.set_coeff(Word::empty(), RatVec(static_cast<std::size_t>(c.components())));
  return out;
}

NCSeries natural_part(const NCSeries& c) {
  NCSeries out(c.alphabet(), c.components(), c.maxdeg());
  for (const auto& [w, v] : c.terms())
    if (w.is_x0_power()) out.set_coeff(w, v);
  return out;
}

std::optional<int> order(const NCSeries& c) { return c.order(); }

Rat ultrametric(const NCSeries& c, const NCSeries& d, const Rat& sigma) {
  if (!c.same_shape(d)) throw ShapeError("ultrametric: shape mismatch");
  if (sigma <= 0 || sigma >= 1)
    throw DomainError("ultrametric requires sigma in ]0,1[");
  auto ord = sub(c, d).order();
  if (!ord) return Rat(0);
  return rat_pow(sigma, static_cast<unsigned long>(*ord));
}

NCSeries monomial_series(const Alphabet& a, int components, int maxdeg,
                         const Word& w, const RatVec& coeff) {
  NCSeries out(a, components, maxdeg);
  out.set_coeff(w, coeff);
  return out;
}

NCSeries one_series(const Alphabet& a, int components, int maxdeg) {
  return monomial_series(a, components, maxdeg, Word::empty(),
                         RatVec(static_cast<std::size_t>(components), Rat(1)));
}

NCSeries zero_series(const Alphabet& a, int components, int maxdeg) {
  return NCSeries(a, components, maxdeg);
}

std::string to_string(const NCSeries& c) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, v] : c.terms()) {
    os << (first ? "" : " + ") << "[";
    for (std::size_t i = 0; i < v.size(); ++i)
      os << (i ? "," : "") << rat_str(v[i]);
    os << "]" << w.str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace fpa
