#include "fpa/comm_series.hpp"

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

std::string CommMonomial::str() const {
  std::string s;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exponents[i]);
  }
  return s;
}

CommSeries::CommSeries(int vars, int components, int maxdeg)
    : vars_(vars), components_(components), maxdeg_(maxdeg) {
  if (vars_ < 1) throw DomainError("commutative series requires vars >= 1");
  if (components_ < 1) throw DomainError("series requires components >= 1");
  if (maxdeg_ < 0) throw DomainError("series requires maxdeg >= 0");
}

void CommSeries::check_monomial(const CommMonomial& mono) const {
  if (mono.vars() != vars_)
    throw ShapeError("monomial variable count mismatch");
  for (int e : mono.exponents)
    if (e < 0) throw DomainError("negative exponent");
  if (!is_polynomial() && mono.degree() > maxdeg_)
    throw DegreeError("monomial degree " + std::to_string(mono.degree()) +
                      " exceeds truncation degree " + std::to_string(maxdeg_));
}

const Rat& CommSeries::coeff(const CommMonomial& mono, int i) const {
  check_monomial(mono);
  if (i < 0 || i >= components_)
    throw ShapeError("component index out of range");
  auto it = terms_.find(mono);
  if (it == terms_.end()) return kZero;
  return it->second[static_cast<std::size_t>(i)];
}

void CommSeries::set_coeff(const CommMonomial& mono, int i, const Rat& v) {
  check_monomial(mono);
  if (i < 0 || i >= components_)
    throw ShapeError("component index out of range");
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    if (fpa::is_zero(v)) return;
    RatVec vec(static_cast<std::size_t>(components_));
    vec[static_cast<std::size_t>(i)] = v;
    terms_.emplace(mono, std::move(vec));
    return;
  }
  it->second[static_cast<std::size_t>(i)] = v;
  if (all_zero(it->second)) terms_.erase(it);
}

void CommSeries::set_coeff(const CommMonomial& mono, const RatVec& v) {
  check_monomial(mono);
  if (static_cast<int>(v.size()) != components_)
    throw ShapeError("coefficient vector length mismatch");
  if (all_zero(v)) {
    terms_.erase(mono);
    return;
  }
  terms_[mono] = v;
}

int CommSeries::support_degree() const {
  int d = 0;
  for (const auto& [mono, v] : terms_)
    if (!all_zero(v)) d = std::max(d, mono.degree());
  return d;
}

std::optional<int> CommSeries::proper_order() const {
  for (const auto& [mono, v] : terms_) {
    if (mono.degree() == 0) continue;
    if (!all_zero(v)) return mono.degree();
  }
  return std::nullopt;
}

bool operator==(const CommSeries& a, const CommSeries& b) {
  return a.vars_ == b.vars_ && a.components_ == b.components_ &&
         a.maxdeg_ == b.maxdeg_ && a.terms_ == b.terms_;
}

CommSeries add(const CommSeries& a, const CommSeries& b) {
  if (!a.same_shape(b)) throw ShapeError("add: shape mismatch");
  CommSeries out = a;
  for (const auto& [mono, v] : b.terms())
    for (int i = 0; i < b.components(); ++i) {
      Rat sum = out.coeff(mono, i) + v[static_cast<std::size_t>(i)];
      out.set_coeff(mono, i, sum);
    }
  return out;
}

CommSeries scale(const Rat& alpha, const CommSeries& c) {
  CommSeries out(c.vars(), c.components(), c.maxdeg());
  if (is_zero(alpha)) return out;
  for (const auto& [mono, v] : c.terms()) {
    RatVec scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = alpha * v[i];
    out.set_coeff(mono, scaled);
  }
  return out;
}

CommSeries negate(const CommSeries& c) { return scale(rat(-1), c); }

std::string to_string(const CommSeries& c) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, v] : c.terms()) {
    os << (first ? "" : " + ") << "[";
    for (std::size_t i = 0; i < v.size(); ++i)
      os << (i ? "," : "") << rat_str(v[i]);
    os << "](" << mono.str() << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace fpa
