#include "fpa/convergence.hpp"

#include <cmath>

#include "fpa/errors.hpp"
#include "fpa/shuffle.hpp"

namespace fpa {

namespace {
constexpr double kRelSlack = 1e-9;

double lfact(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

bool leq_with_slack(double lhs, double rhs) {
  return lhs <= rhs + kRelSlack * std::max({1.0, std::fabs(lhs),
                                            std::fabs(rhs)});
}
}  // namespace

double seminorm(const NCSeries& c, double R, int N) {
  if (R <= 0) throw DomainError("seminorm requires R > 0");
  double sup = 0.0;
  for (const auto& [w, v] : c.terms()) {
    if (w.length() > N) continue;
    const double weight =
        std::exp(w.length() * std::log(R) - lfact(w.length()));
    for (const auto& q : v)
      sup = std::max(sup, std::fabs(to_double(q)) * weight);
  }
  return sup;
}

RelativeDegreeReport relative_degree(const NCSeries& c, int N) {
  if (c.alphabet().m != 1 || c.components() != 1)
    throw ShapeError("relative_degree requires a SISO series over {x0, x1}");
  if (c.maxdeg() < N)
    throw DegreeError("relative_degree: series not exact to requested degree");

  RelativeDegreeReport report;
  int min_prefix = -1;
  for (const auto& [w, v] : c.terms()) {
    if (w.length() > N || w.is_x0_power() || is_zero(v[0])) continue;
    const int p = w.x0_prefix_length();
    if (min_prefix < 0 || p < min_prefix) min_prefix = p;
  }
  if (min_prefix < 0) {
    // purely natural data up to N; longer words could still carry x1
    report.truncation_limited = true;
    return report;
  }
  const int r = min_prefix + 1;
  const Rat K = c.coeff(Word::x0_power(r - 1).concat(Word::letter(1)));
  report.r = r;
  report.K = K;
  report.defined = !is_zero(K);

  report.truncation_limited = (N < r + 1);
  if (!report.truncation_limited) {
    // a length-N word containing x1 that is zero only by absence leaves
    // longer violations unexcluded
    for (const auto& w : enumerate_words(c.alphabet(), N)) {
      if (w.is_x0_power()) continue;
      if (c.terms().find(w) == c.terms().end()) {
        report.truncation_limited = true;
        break;
      }
    }
  }
  return report;
}

std::optional<GrowthBound> fit_growth(const NCSeries& c, int N,
                                      double gevrey) {
  if (c.maxdeg() < N)
    throw DegreeError("fit_growth: series not exact to requested degree");
  // per-degree maxima normalized by (n!)^s
  std::vector<double> peak(static_cast<std::size_t>(N) + 1, 0.0);
  for (const auto& [w, v] : c.terms()) {
    if (w.length() > N) continue;
    for (const auto& q : v)
      peak[static_cast<std::size_t>(w.length())] =
          std::max(peak[static_cast<std::size_t>(w.length())],
                   std::fabs(to_double(q)) /
                       std::exp(gevrey * lfact(w.length())));
  }
  std::vector<int> degrees;
  for (int n = 0; n <= N; ++n)
    if (peak[static_cast<std::size_t>(n)] > 0.0) degrees.push_back(n);
  if (degrees.empty()) return std::nullopt;  // zero series has no growth

  // per-degree geometric ratios between occupied degrees
  std::vector<double> ratios;
  for (std::size_t i = 0; i + 1 < degrees.size(); ++i) {
    const int gap = degrees[i + 1] - degrees[i];
    const double q = peak[static_cast<std::size_t>(degrees[i + 1])] /
                     peak[static_cast<std::size_t>(degrees[i])];
    ratios.push_back(std::pow(q, 1.0 / gap));
  }

  // Stabilization test: the ratios in the upper half must not exceed the
  // maximum seen in the lower half.  A class exponent that is too small
  // shows up as ratios still growing at the truncation boundary.
  if (ratios.size() >= 2) {
    const std::size_t half = ratios.size() / 2;
    double head = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < ratios.size(); ++i)
      (i < half ? head : tail) = std::max(i < half ? head : tail, ratios[i]);
    if (tail > head * (1.0 + kRelSlack)) return std::nullopt;
  }

  double required = 0.0;
  for (double q : ratios) required = std::max(required, q);
  // geometric grid 2^{k/8}, k in [-32, 64]
  double M = 0.0;
  for (int k = -32; k <= 64; ++k) {
    const double grid = std::pow(2.0, k / 8.0);
    if (grid * (1.0 + kRelSlack) >= required) {
      M = grid;
      break;
    }
  }
  if (M == 0.0) return std::nullopt;  // growth beyond the grid

  double K = 0.0;
  for (int n : degrees)
    K = std::max(K, peak[static_cast<std::size_t>(n)] / std::pow(M, n));
  return GrowthBound{K, M, gevrey};
}

namespace {

bool check_coefficient_bound(const NCSeries& result, int N, double empty_bound,
                             double lead, double base) {
  for (const auto& [w, v] : result.terms()) {
    if (w.length() > N) continue;
    const int n = w.length();
    const double bound =
        (n == 0) ? empty_bound
                 : lead * std::exp(n * std::log(base) + lfact(n));
    for (const auto& q : v)
      if (!leq_with_slack(std::fabs(to_double(q)), bound)) return false;
  }
  return true;
}

}  // namespace

bool check_wf_local_bound(const GrowthBound& d_bound,
                          const GrowthBound& c_bound, int k,
                          const NCSeries& result, int N) {
  const double Kd = d_bound.K, Md = d_bound.M;
  const double Kc = c_bound.K, Mc = c_bound.M;
  const double t = k * Kc * Md;
  const double lead = k * Kd * Kc * Md / (1.0 + t);
  const double base = Mc * (1.0 + t);
  return check_coefficient_bound(result, N, Kd, lead, base);
}

bool check_mixed_bound(const GrowthBound& c_bound, const GrowthBound& d_bound,
                       int m, const NCSeries& result, int N) {
  const double Kc = c_bound.K, Mc = c_bound.M;
  const double Kd = d_bound.K, Md = d_bound.M;
  const double base = (1.0 + m * Kd) * Mc + Md;
  const double lead = Kc * Mc * (1.0 + m * Kd) / base;
  return check_coefficient_bound(result, N, Kc, lead, base);
}

double antipode_amplification(double K_c, int m) {
  if (K_c <= 0 || m < 1)
    throw DomainError("antipode_amplification requires K_c > 0, m >= 1");
  const double t = m * K_c;
  return 1.0 / (1.0 - t * std::log1p(1.0 / t));
}

bool gamma_inequality_check(double x, double r) {
  if (x < 0 || r <= 0 || r > 1)
    throw DomainError("gamma_inequality_check requires x >= 0, r in ]0,1]");
  const double pi_term = (1.0 - r) * std::log(2.0 * M_PI / std::exp(2.0));
  const double log_Kr = 0.5 * (pi_term + std::log(r));
  const double log_Ktr = std::log(2.0) + 0.5 * (pi_term + std::log(4.0));
  const double log_Mr = r * std::log(r);
  const double lg = std::lgamma(x + 1.0);
  const double mid = std::lgamma(r * x + 1.0);
  const double lower = log_Kr + x * log_Mr + r * lg;
  const double upper = log_Ktr + x * std::log(2.0) + r * lg;
  return leq_with_slack(lower, mid) && leq_with_slack(mid, upper);
}

namespace {

void composition_sum(int n, std::vector<int>& parts, std::size_t idx, double r,
                     const std::vector<double>& x, double* acc) {
  if (idx + 1 == parts.size()) {
    parts[idx] = n;
    int total = 0;
    for (int p : parts) total += p;
    double log_term = std::lgamma(r * total + 1.0);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      log_term -= std::lgamma(r * parts[j] + 1.0);
      if (parts[j] > 0) {
        if (x[j] == 0.0) return;  // 0^{positive} annihilates the term
        log_term += r * parts[j] * std::log(x[j]);
      }
    }
    *acc += std::exp(log_term);
    return;
  }
  for (int v = 0; v <= n; ++v) {
    parts[idx] = v;
    composition_sum(n - v, parts, idx + 1, r, x, acc);
  }
}

}  // namespace

bool neoclassical_check(double r, int m, int n, const std::vector<double>& x) {
  if (r <= 0 || r > 1 || m < 1 || n < 0)
    throw DomainError("neoclassical_check requires r in ]0,1], m >= 1, n >= 0");
  if (static_cast<int>(x.size()) != m)
    throw ShapeError("neoclassical_check: x must have m entries");
  for (double v : x)
    if (v < 0) throw DomainError("neoclassical_check requires x >= 0");

  double lhs = 0.0;
  std::vector<int> parts(static_cast<std::size_t>(m), 0);
  composition_sum(n, parts, 0, r, x, &lhs);
  double sum = 0.0;
  for (double v : x) sum += v;
  // right side carries the fractional total degree r n; at r = 1 this is
  // the multinomial theorem, and at m = 1 both sides equal x^{rn}
  const double rhs =
      std::pow(1.0 / r, 2.0 * (m - 1)) * std::pow(sum, r * n);
  return leq_with_slack(lhs, rhs);
}

double mittag_leffler(double alpha, double x, double tol) {
  if (alpha <= 0 || alpha > 1 || x < 0 || tol <= 0)
    throw DomainError("mittag_leffler requires alpha in ]0,1], x >= 0");
  double total = 0.0;
  for (int n = 0; n < 100000; ++n) {
    const double term =
        (x == 0.0 && n > 0)
            ? 0.0
            : std::exp(n * (x > 0 ? std::log(x) : 0.0) -
                       std::lgamma(alpha * n + 1.0));
    total += term;
    if (term < tol && n > 0) break;
  }
  return total;
}

bool check_shuffle_seminorm_bound(const std::vector<NCSeries>& cs, double R,
                                  double eps, int N) {
  if (cs.empty()) throw DomainError("need at least one series");
  if (eps <= 0 || eps >= 1)
    throw DomainError("check_shuffle_seminorm_bound requires eps in ]0,1[");
  NCSeries prod = cs.front().truncated(N);
  double rhs = seminorm(cs.front(), R, N);
  for (std::size_t i = 1; i < cs.size(); ++i) {
    prod = shuffle(prod, cs[i].truncated(N), N);
    rhs *= seminorm(cs[i], R, N);
  }
  rhs /= std::pow(1.0 - eps, static_cast<double>(cs.size()));
  return leq_with_slack(seminorm(prod, eps * R, N), rhs);
}

bool check_wf_global_bound(const GrowthBound& d_bound, double sbar,
                           const NCSeries& c, const NCSeries& result,
                           double R, double eps, int N) {
  if (sbar < 0 || sbar >= 1)
    throw DomainError("check_wf_global_bound requires sbar in [0,1[");
  if (eps <= 0 || eps >= 1)
    throw DomainError("check_wf_global_bound requires eps in ]0,1[");
  if (!c.is_proper())
    throw DomainError("check_wf_global_bound requires a proper series");
  const double r = 1.0 - sbar;
  const double Kt_r =
      2.0 * std::sqrt(std::pow(2.0 * M_PI / std::exp(2.0), 1.0 - r) * 4.0);
  const double arg = 2.0 * d_bound.M * c.components() * seminorm(c, R, N) /
                     (1.0 - eps);
  const double rhs = d_bound.K * Kt_r * mittag_leffler(r, arg, 1e-14);
  return leq_with_slack(seminorm(result, eps * R, N), rhs);
}

bool check_shuffle_power_growth(const NCSeries& e, const GrowthBound& e_bound,
                                int j, int n, int N) {
  if (n < 1) throw DomainError("check_shuffle_power_growth requires n >= 1");
  if (!e.is_proper())
    throw DomainError("check_shuffle_power_growth requires a proper series");
  const NCSeries power = shuffle_power(e, n, N);
  const double log_Ke = std::log(e_bound.K);
  const double log_Me = std::log(e_bound.M);
  for (const auto& [w, v] : power.terms()) {
    if (w.length() > N || w.is_empty()) continue;
    const int len = w.length();
    if (len < n) return false;  // C(len-1, n-1) = 0 yet the coefficient isn't
    const double log_binom = lfact(len - 1) - lfact(n - 1) - lfact(len - n);
    const double bound = std::exp(n * log_Ke + (len - n * j) * log_Me +
                                  lfact(len) + log_binom);
    for (const auto& q : v)
      if (!leq_with_slack(std::fabs(to_double(q)), bound)) return false;
  }
  return true;
}

}  // namespace fpa
