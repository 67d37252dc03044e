#include "fpa/simulate.hpp"

#include <cmath>
#include <set>

#include "fpa/errors.hpp"

namespace fpa {

SignalGrid SignalGrid::sampled(
    double t0, double T, double dt,
    const std::vector<std::function<double(double)>>& signals) {
  if (dt <= 0 || T < t0) throw DomainError("bad signal grid bounds");
  const int steps = static_cast<int>(std::floor((T - t0) / dt + 0.5));
  SignalGrid grid;
  grid.t0 = t0;
  grid.dt = dt;
  grid.channels.resize(signals.size());
  for (std::size_t ch = 0; ch < signals.size(); ++ch) {
    grid.channels[ch].resize(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k)
      grid.channels[ch][static_cast<std::size_t>(k)] = signals[ch](t0 + k * dt);
  }
  return grid;
}

namespace {

void check_grid(const SignalGrid& u) {
  if (u.channels.empty() || u.samples() == 0)
    throw DomainError("empty signal grid");
  for (const auto& ch : u.channels)
    if (static_cast<int>(ch.size()) != u.samples())
      throw ShapeError("signal channels must share one grid");
}

double channel_value(const SignalGrid& u, int channel, int k) {
  if (channel == 0) return 1.0;  // u0 = 1
  return u.channels[static_cast<std::size_t>(channel - 1)]
                   [static_cast<std::size_t>(k)];
}

// words needed to evaluate c: support plus all suffixes
std::set<Word> suffix_closure(const NCSeries& c) {
  std::set<Word> words;
  words.insert(Word::empty());
  for (const auto& [w, v] : c.terms())
    for (int k = 0; k <= w.length(); ++k) words.insert(w.suffix(k));
  return words;
}

std::map<Word, std::vector<double>> chen_integrals_for(
    const std::set<Word>& words, const SignalGrid& u) {
  check_grid(u);
  const int samples = u.samples();
  std::map<Word, std::vector<double>> E;
  E.emplace(Word::empty(),
            std::vector<double>(static_cast<std::size_t>(samples), 1.0));
  // set iteration is length-lex, so suffixes are ready before their words
  for (const auto& w : words) {
    if (w.is_empty()) continue;
    const int channel = w.at(0);
    const auto& inner = E.at(w.suffix(1));
    std::vector<double> arr(static_cast<std::size_t>(samples), 0.0);
    for (int k = 1; k < samples; ++k) {
      const double left = channel_value(u, channel, k - 1) *
                          inner[static_cast<std::size_t>(k - 1)];
      const double right =
          channel_value(u, channel, k) * inner[static_cast<std::size_t>(k)];
      arr[static_cast<std::size_t>(k)] =
          arr[static_cast<std::size_t>(k - 1)] + 0.5 * u.dt * (left + right);
    }
    E.emplace(w, std::move(arr));
  }
  return E;
}

}  // namespace

std::map<Word, std::vector<double>> chen_integrals(const SignalGrid& u,
                                                   int N) {
  check_grid(u);
  if (N < 0) throw DomainError("chen_integrals requires N >= 0");
  const Alphabet alphabet(static_cast<int>(u.channels.size()));
  std::set<Word> words;
  for (const auto& w : enumerate_words_upto(alphabet, N)) words.insert(w);
  return chen_integrals_for(words, u);
}

std::vector<std::vector<double>> fliess_eval(const NCSeries& c,
                                             const SignalGrid& u) {
  check_grid(u);
  if (c.m() != static_cast<int>(u.channels.size()))
    throw ShapeError("fliess_eval: alphabet/channel mismatch");
  const auto E = chen_integrals_for(suffix_closure(c), u);
  const int samples = u.samples();
  std::vector<std::vector<double>> y(
      static_cast<std::size_t>(c.components()),
      std::vector<double>(static_cast<std::size_t>(samples), 0.0));
  for (const auto& [w, v] : c.terms()) {
    const auto& arr = E.at(w);
    for (int i = 0; i < c.components(); ++i) {
      const double coeff = to_double(v[static_cast<std::size_t>(i)]);
      if (coeff == 0.0) continue;
      auto& yi = y[static_cast<std::size_t>(i)];
      for (int k = 0; k < samples; ++k)
        yi[static_cast<std::size_t>(k)] +=
            coeff * arr[static_cast<std::size_t>(k)];
    }
  }
  return y;
}

std::vector<double> static_eval(const CommSeries& d,
                                const std::vector<double>& z) {
  if (static_cast<int>(z.size()) != d.vars())
    throw ShapeError("static_eval: dimension mismatch");
  std::vector<double> out(static_cast<std::size_t>(d.components()), 0.0);
  for (const auto& [mono, v] : d.terms()) {
    double monomial = 1.0;
    for (int i = 0; i < d.vars(); ++i)
      for (int p = 0; p < mono.exponents[static_cast<std::size_t>(i)]; ++p)
        monomial *= z[static_cast<std::size_t>(i)];
    for (int i = 0; i < d.components(); ++i)
      out[static_cast<std::size_t>(i)] +=
          to_double(v[static_cast<std::size_t>(i)]) * monomial;
  }
  return out;
}

SignalGrid closed_loop_sim(const NCSeries& plant, const CommSeries& d,
                           const SignalGrid& v) {
  check_grid(v);
  const int m = plant.m();
  const int l = plant.components();
  if (d.vars() != l || d.components() != m)
    throw ShapeError("closed_loop_sim: feedback map shape mismatch");
  if (static_cast<int>(v.channels.size()) != m)
    throw ShapeError("closed_loop_sim: reference channel count mismatch");

  const auto words = suffix_closure(plant);
  const int samples = v.samples();

  // E values marched in time; the per-step fixed point resolves the
  // algebraic loop through f_d
  std::map<Word, std::vector<double>> E;
  for (const auto& w : words)
    E.emplace(w, std::vector<double>(static_cast<std::size_t>(samples),
                                     w.is_empty() ? 1.0 : 0.0));

  SignalGrid u_eff = v;  // effective input v + f_d(y)
  SignalGrid y;
  y.t0 = v.t0;
  y.dt = v.dt;
  y.channels.assign(static_cast<std::size_t>(l),
                    std::vector<double>(static_cast<std::size_t>(samples), 0.0));

  auto output_at = [&](int k) {
    std::vector<double> out(static_cast<std::size_t>(l), 0.0);
    for (const auto& [w, coeffs] : plant.terms()) {
      const double e = E.at(w)[static_cast<std::size_t>(k)];
      for (int i = 0; i < l; ++i)
        out[static_cast<std::size_t>(i)] +=
            to_double(coeffs[static_cast<std::size_t>(i)]) * e;
    }
    return out;
  };

  // k = 0: y(t0) = (c, empty), no loop to solve
  std::vector<double> yk = output_at(0);
  for (int i = 0; i < l; ++i)
    y.channels[static_cast<std::size_t>(i)][0] = yk[static_cast<std::size_t>(i)];
  auto fd = static_eval(d, yk);
  for (int i = 0; i < m; ++i)
    u_eff.channels[static_cast<std::size_t>(i)][0] +=
        fd[static_cast<std::size_t>(i)];

  constexpr int kIterationCap = 50;
  constexpr double kTol = 1e-12;
  for (int k = 1; k < samples; ++k) {
    // warm start from the previous output
    for (int i = 0; i < l; ++i)
      yk[static_cast<std::size_t>(i)] =
          y.channels[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)];
    bool converged = false;
    for (int iter = 0; iter < kIterationCap; ++iter) {
      fd = static_eval(d, yk);
      for (int i = 0; i < m; ++i)
        u_eff.channels[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
            v.channels[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
            fd[static_cast<std::size_t>(i)];
      // refresh the trapezoid step of every Chen integral at t_k
      for (const auto& w : words) {
        if (w.is_empty()) continue;
        const int channel = w.at(0);
        const auto& inner = E.at(w.suffix(1));
        auto& arr = E.at(w);
        const double left = channel_value(u_eff, channel, k - 1) *
                            inner[static_cast<std::size_t>(k - 1)];
        const double right = channel_value(u_eff, channel, k) *
                             inner[static_cast<std::size_t>(k)];
        arr[static_cast<std::size_t>(k)] =
            arr[static_cast<std::size_t>(k - 1)] + 0.5 * v.dt * (left + right);
      }
      auto next = output_at(k);
      double delta = 0.0, scale = 1.0;
      for (int i = 0; i < l; ++i) {
        delta = std::max(delta, std::fabs(next[static_cast<std::size_t>(i)] -
                                          yk[static_cast<std::size_t>(i)]));
        scale = std::max(scale, std::fabs(next[static_cast<std::size_t>(i)]));
      }
      yk = std::move(next);
      if (delta <= kTol * scale) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw NoConvergenceError("closed_loop_sim: step fixed point diverged");
    for (int i = 0; i < l; ++i)
      y.channels[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          yk[static_cast<std::size_t>(i)];
  }
  return y;
}

namespace {

double interp(const SignalGrid& v, int channel, double t) {
  const auto& ch = v.channels[static_cast<std::size_t>(channel)];
  const double s = (t - v.t0) / v.dt;
  const int k = std::max(0, std::min(v.steps() - 1,
                                     static_cast<int>(std::floor(s))));
  const double frac = std::min(1.0, std::max(0.0, s - k));
  return ch[static_cast<std::size_t>(k)] * (1.0 - frac) +
         ch[static_cast<std::size_t>(k + 1)] * frac;
}

}  // namespace

SignalGrid closed_loop_sim(const StateSpaceModel& model, const CommSeries& d,
                           const SignalGrid& v) {
  check_grid(v);
  if (static_cast<int>(v.channels.size()) != model.inputs)
    throw ShapeError("closed_loop_sim: reference channel count mismatch");
  if (d.vars() != model.outputs() || d.components() != model.inputs)
    throw ShapeError("closed_loop_sim: feedback map shape mismatch");

  const int n = model.dim;
  const int samples = v.samples();
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    x[static_cast<std::size_t>(i)] = to_double(model.x0[static_cast<std::size_t>(i)]);

  auto outputs = [&](const std::vector<double>& state) {
    std::vector<double> out(static_cast<std::size_t>(model.outputs()));
    for (int i = 0; i < model.outputs(); ++i)
      out[static_cast<std::size_t>(i)] =
          model.output[static_cast<std::size_t>(i)].eval(state);
    return out;
  };

  auto deriv = [&](double t, const std::vector<double>& state) {
    auto fd = static_eval(d, outputs(state));
    std::vector<double> dx(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      dx[static_cast<std::size_t>(j)] =
          model.drift[static_cast<std::size_t>(j)].eval(state);
    for (int i = 0; i < model.inputs; ++i) {
      const double u = interp(v, i, t) + fd[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j)
        dx[static_cast<std::size_t>(j)] +=
            u * model.input[static_cast<std::size_t>(i)]
                           [static_cast<std::size_t>(j)].eval(state);
    }
    return dx;
  };

  SignalGrid y;
  y.t0 = v.t0;
  y.dt = v.dt;
  y.channels.assign(static_cast<std::size_t>(model.outputs()),
                    std::vector<double>(static_cast<std::size_t>(samples), 0.0));
  auto record = [&](int k, const std::vector<double>& state) {
    auto out = outputs(state);
    for (int i = 0; i < model.outputs(); ++i)
      y.channels[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          out[static_cast<std::size_t>(i)];
  };
  record(0, x);

  const double h = v.dt;
  for (int k = 1; k < samples; ++k) {
    const double t = v.time(k - 1);
    auto k1 = deriv(t, x);
    std::vector<double> tmp(x);
    for (int j = 0; j < n; ++j)
      tmp[static_cast<std::size_t>(j)] =
          x[static_cast<std::size_t>(j)] + 0.5 * h * k1[static_cast<std::size_t>(j)];
    auto k2 = deriv(t + 0.5 * h, tmp);
    for (int j = 0; j < n; ++j)
      tmp[static_cast<std::size_t>(j)] =
          x[static_cast<std::size_t>(j)] + 0.5 * h * k2[static_cast<std::size_t>(j)];
    auto k3 = deriv(t + 0.5 * h, tmp);
    for (int j = 0; j < n; ++j)
      tmp[static_cast<std::size_t>(j)] =
          x[static_cast<std::size_t>(j)] + h * k3[static_cast<std::size_t>(j)];
    auto k4 = deriv(t + h, tmp);
    for (int j = 0; j < n; ++j)
      x[static_cast<std::size_t>(j)] +=
          h / 6.0 *
          (k1[static_cast<std::size_t>(j)] + 2.0 * k2[static_cast<std::size_t>(j)] +
           2.0 * k3[static_cast<std::size_t>(j)] + k4[static_cast<std::size_t>(j)]);
    record(k, x);
  }
  return y;
}

}  // namespace fpa
