#include "fpa/state_space.hpp"

#include <cmath>

#include "fpa/errors.hpp"

namespace fpa {

namespace {
StateExpr::Key unit_key(int vars) {
  return StateExpr::Key(static_cast<std::size_t>(vars), {0, 0, 0});
}
}  // namespace

void StateExpr::add_term(const Key& key, const Rat& coeff) {
  if (is_zero(coeff)) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (is_zero(it->second)) terms_.erase(it);
}

StateExpr StateExpr::constant(int vars, const Rat& value) {
  StateExpr e(vars);
  e.add_term(unit_key(vars), value);
  return e;
}

StateExpr StateExpr::variable(int vars, int i) {
  StateExpr e(vars);
  Key k = unit_key(vars);
  k[static_cast<std::size_t>(i)][0] = 1;
  e.add_term(k, Rat(1));
  return e;
}

StateExpr StateExpr::sin_of(int vars, int i) {
  StateExpr e(vars);
  Key k = unit_key(vars);
  k[static_cast<std::size_t>(i)][1] = 1;
  e.add_term(k, Rat(1));
  return e;
}

StateExpr StateExpr::cos_of(int vars, int i) {
  StateExpr e(vars);
  Key k = unit_key(vars);
  k[static_cast<std::size_t>(i)][2] = 1;
  e.add_term(k, Rat(1));
  return e;
}

bool StateExpr::uses_trig(int i) const {
  for (const auto& [key, coeff] : terms_)
    if (key[static_cast<std::size_t>(i)][1] > 0 ||
        key[static_cast<std::size_t>(i)][2] > 0)
      return true;
  return false;
}

StateExpr StateExpr::operator+(const StateExpr& rhs) const {
  StateExpr out = *this;
  for (const auto& [key, coeff] : rhs.terms_) out.add_term(key, coeff);
  return out;
}

StateExpr StateExpr::operator-(const StateExpr& rhs) const {
  StateExpr out = *this;
  for (const auto& [key, coeff] : rhs.terms_) out.add_term(key, -coeff);
  return out;
}

StateExpr StateExpr::operator*(const StateExpr& rhs) const {
  StateExpr out(vars_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : rhs.terms_) {
      Key key = ka;
      for (std::size_t i = 0; i < key.size(); ++i)
        for (int j = 0; j < 3; ++j) key[i][static_cast<std::size_t>(j)] +=
            kb[i][static_cast<std::size_t>(j)];
      out.add_term(key, ca * cb);
    }
  return out;
}

StateExpr StateExpr::scaled(const Rat& alpha) const {
  StateExpr out(vars_);
  for (const auto& [key, coeff] : terms_) out.add_term(key, alpha * coeff);
  return out;
}

StateExpr StateExpr::partial(int i) const {
  StateExpr out(vars_);
  const auto idx = static_cast<std::size_t>(i);
  for (const auto& [key, coeff] : terms_) {
    const int a = key[idx][0], b = key[idx][1], d = key[idx][2];
    if (a > 0) {  // d/dx x^a = a x^{a-1}
      Key k = key;
      k[idx][0] -= 1;
      out.add_term(k, coeff * a);
    }
    if (b > 0) {  // d/dx sin^b = b sin^{b-1} cos
      Key k = key;
      k[idx][1] -= 1;
      k[idx][2] += 1;
      out.add_term(k, coeff * b);
    }
    if (d > 0) {  // d/dx cos^d = -d cos^{d-1} sin
      Key k = key;
      k[idx][2] -= 1;
      k[idx][1] += 1;
      out.add_term(k, coeff * (-d));
    }
  }
  return out;
}

Rat StateExpr::eval(const std::vector<Rat>& x, const std::vector<Rat>& sin_x,
                    const std::vector<Rat>& cos_x) const {
  Rat total = 0;
  for (const auto& [key, coeff] : terms_) {
    Rat term = coeff;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (key[i][0] > 0)
        term *= rat_pow(x[i], static_cast<unsigned long>(key[i][0]));
      if (key[i][1] > 0)
        term *= rat_pow(sin_x[i], static_cast<unsigned long>(key[i][1]));
      if (key[i][2] > 0)
        term *= rat_pow(cos_x[i], static_cast<unsigned long>(key[i][2]));
      if (is_zero(term)) break;
    }
    total += term;
  }
  return total;
}

double StateExpr::eval(const std::vector<double>& x) const {
  double total = 0.0;
  for (const auto& [key, coeff] : terms_) {
    double term = to_double(coeff);
    for (std::size_t i = 0; i < key.size(); ++i) {
      for (int j = 0; j < key[i][0]; ++j) term *= x[i];
      if (key[i][1] > 0) term *= std::pow(std::sin(x[i]), key[i][1]);
      if (key[i][2] > 0) term *= std::pow(std::cos(x[i]), key[i][2]);
    }
    total += term;
  }
  return total;
}

NCSeries series_from_statespace(const StateSpaceModel& model, int N) {
  const int n = model.dim;
  const int m = model.inputs;
  if (static_cast<int>(model.drift.size()) != n ||
      static_cast<int>(model.input.size()) != m)
    throw ShapeError("series_from_statespace: field dimensions mismatch");

  std::vector<Rat> sin0 = model.sin0, cos0 = model.cos0;
  if (sin0.empty()) sin0.assign(static_cast<std::size_t>(n), Rat(0));
  if (cos0.empty()) cos0.assign(static_cast<std::size_t>(n), Rat(1));
  for (int i = 0; i < n; ++i) {
    if (!is_zero(model.x0[static_cast<std::size_t>(i)]) &&
        is_zero(sin0[static_cast<std::size_t>(i)]) &&
        cos0[static_cast<std::size_t>(i)] == 1) {
      // default (0,1) is only exact at x_i(0) = 0
      bool trig = false;
      for (const auto& e : model.drift) trig = trig || e.uses_trig(i);
      for (const auto& fields : model.input)
        for (const auto& e : fields) trig = trig || e.uses_trig(i);
      for (const auto& e : model.output) trig = trig || e.uses_trig(i);
      if (trig)
        throw DomainError(
            "series_from_statespace: supply exact sin/cos of the initial "
            "state for variable " +
            std::to_string(i));
    }
  }

  auto lie = [&](const StateExpr& f, int letter) {
    StateExpr out(n);
    const auto& field =
        (letter == 0) ? model.drift
                      : model.input[static_cast<std::size_t>(letter - 1)];
    for (int j = 0; j < n; ++j)
      out = out + f.partial(j) * field[static_cast<std::size_t>(j)];
    return out;
  };

  const Alphabet alphabet(m);
  NCSeries out(alphabet, model.outputs(), N);
  for (int comp = 0; comp < model.outputs(); ++comp) {
    // breadth-first over words; appending a letter applies one more
    // directional derivative
    std::map<Word, StateExpr> level;
    level.emplace(Word::empty(), model.output[static_cast<std::size_t>(comp)]);
    for (int len = 0; len <= N; ++len) {
      std::map<Word, StateExpr> next;
      for (const auto& [w, f] : level) {
        out.set_coeff(w, comp, f.eval(model.x0, sin0, cos0));
        if (len == N) continue;
        for (int letter = 0; letter <= m; ++letter)
          next.emplace(w.concat(Word::letter(letter)), lie(f, letter));
      }
      level = std::move(next);
    }
  }
  out.prune();
  return out;
}

StateSpaceModel pendulum_model() {
  StateSpaceModel model;
  model.dim = 2;
  model.inputs = 1;
  // x1 = theta, x2 = theta'; theta'' = -sin(theta) + u
  model.drift = {StateExpr::variable(2, 1),
                 StateExpr::sin_of(2, 0).scaled(rat(-1))};
  model.input = {{StateExpr::constant(2, Rat(0)), StateExpr::constant(2, Rat(1))}};
  model.output = {StateExpr::variable(2, 0)};
  model.x0 = {Rat(0), Rat(1)};
  return model;
}

StateSpaceModel bilinear_unity_model() {
  StateSpaceModel model;
  model.dim = 1;
  model.inputs = 1;
  model.drift = {StateExpr::constant(1, Rat(0))};
  model.input = {{StateExpr::variable(1, 0)}};
  model.output = {StateExpr::variable(1, 0)};
  model.x0 = {Rat(1)};
  return model;
}

}  // namespace fpa
