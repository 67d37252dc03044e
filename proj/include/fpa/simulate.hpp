#ifndef FPA_SIMULATE_HPP
#define FPA_SIMULATE_HPP

#include <functional>
#include <map>
#include <vector>

#include "fpa/comm_series.hpp"
#include "fpa/nc_series.hpp"
#include "fpa/state_space.hpp"

namespace fpa {

// Uniformly sampled multichannel signal on [t0, t0 + steps*dt].  The drift
// channel u0 = 1 is implicit and never stored.
struct SignalGrid {
  double t0 = 0.0;
  double dt = 1e-3;
  std::vector<std::vector<double>> channels;

  int samples() const {
    return channels.empty() ? 0 : static_cast<int>(channels.front().size());
  }
  int steps() const { return samples() - 1; }
  double time(int k) const { return t0 + k * dt; }
  double horizon() const { return t0 + steps() * dt; }

  static SignalGrid sampled(double t0, double T, double dt,
                            const std::vector<std::function<double(double)>>&
                                signals);
};

// E_eta[u](t_k, t0) for all |eta| <= N, trapezoidal quadrature, suffix
// recursion (E of a word integrates channel-weighted E of its suffix).
std::map<Word, std::vector<double>> chen_integrals(const SignalGrid& u, int N);

// F_c[u](t_k) = sum (c,eta) E_eta[u](t_k); one output array per component.
std::vector<std::vector<double>> fliess_eval(const NCSeries& c,
                                             const SignalGrid& u);

// f_d(z), the truncated static map.
std::vector<double> static_eval(const CommSeries& d,
                                const std::vector<double>& z);

// Closed loop y = F_c[v + f_d(y)], marched with a per-step fixed point.
SignalGrid closed_loop_sim(const NCSeries& plant, const CommSeries& d,
                           const SignalGrid& v);

// Closed loop by RK4 on the state-space model with u = v + f_d(h(x)).
SignalGrid closed_loop_sim(const StateSpaceModel& model, const CommSeries& d,
                           const SignalGrid& v);

}  // namespace fpa

#endif
