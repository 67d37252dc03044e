#ifndef FPA_STATE_SPACE_HPP
#define FPA_STATE_SPACE_HPP

#include <array>
#include <map>
#include <vector>

#include "fpa/nc_series.hpp"

namespace fpa {

// Exact expression on the state space: a rational combination of monomials
// x_i^a sin(x_i)^b cos(x_i)^c.  Closed under partial derivatives, which is
// all the Lie-derivative coefficient generation needs.
class StateExpr {
 public:
  // per-variable exponents (x, sin, cos)
  using Key = std::vector<std::array<int, 3>>;

  explicit StateExpr(int vars = 0) : vars_(vars) {}
  static StateExpr constant(int vars, const Rat& value);
  static StateExpr variable(int vars, int i);
  static StateExpr sin_of(int vars, int i);
  static StateExpr cos_of(int vars, int i);

  int vars() const { return vars_; }
  bool uses_trig(int i) const;

  StateExpr operator+(const StateExpr& rhs) const;
  StateExpr operator-(const StateExpr& rhs) const;
  StateExpr operator*(const StateExpr& rhs) const;
  StateExpr scaled(const Rat& alpha) const;

  StateExpr partial(int i) const;

  // exact evaluation given the point and exact sin/cos values per variable
  Rat eval(const std::vector<Rat>& x, const std::vector<Rat>& sin_x,
           const std::vector<Rat>& cos_x) const;
  double eval(const std::vector<double>& x) const;

 private:
  void add_term(const Key& key, const Rat& coeff);
  int vars_;
  std::map<Key, Rat> terms_;
};

// Control-affine model dx/dt = g0(x) + sum_i g_i(x) u_i, y = h(x).
struct StateSpaceModel {
  int dim = 0;
  int inputs = 0;
  std::vector<StateExpr> drift;                // g0, dim entries
  std::vector<std::vector<StateExpr>> input;   // g_i, inputs x dim
  std::vector<StateExpr> output;               // h, one entry per output
  std::vector<Rat> x0;
  // exact sin/cos of the initial state; required only for variables that
  // appear inside trig terms
  std::vector<Rat> sin0;
  std::vector<Rat> cos0;

  int outputs() const { return static_cast<int>(output.size()); }
};

// Generating series of the model: (c, x_{i1}...x_{ik}) equals the iterated
// directional derivative L_{g_{ik}} ... L_{g_{i1}} h evaluated at x0.
NCSeries series_from_statespace(const StateSpaceModel& model, int N);

// Forced pendulum theta'' + sin theta = u with y = theta, theta(0) = 0,
// theta'(0) = 1.
StateSpaceModel pendulum_model();

// z' = z u, z(0) = 1, y = z; generating series x1* = sum_k x1^k.
StateSpaceModel bilinear_unity_model();

}  // namespace fpa

#endif
