#ifndef FPA_CONVERGENCE_HPP
#define FPA_CONVERGENCE_HPP

#include <optional>
#include <vector>

#include "fpa/nc_series.hpp"

namespace fpa {

// Coefficient growth certificate |(c,eta)| <= K M^{|eta|} (|eta|!)^gevrey.
struct GrowthBound {
  double K = 1.0;
  double M = 1.0;
  double gevrey = 1.0;
};

// Truncated surrogate of the seminorm sup |(c,eta)| R^{|eta|} / |eta|!,
// taken over words of length <= N and all components.
double seminorm(const NCSeries& c, double R, int N);

struct RelativeDegreeReport {
  bool defined = false;
  int r = 0;               // valid when defined
  Rat K = 0;               // (c, x0^{r-1} x1)
  bool truncation_limited = true;
};

// SISO relative degree from the degree-N data: every word containing x1
// must carry the prefix x0^{r-1} and the coefficient of x0^{r-1}x1 must be
// nonzero.
RelativeDegreeReport relative_degree(const NCSeries& c, int N);

// Fit (K, M) on a geometric grid for the class exponent `gevrey`.  A fit
// exists when the per-degree growth ratios stabilize instead of trending up
// (a truncation can never refute a large enough M outright, so the
// estimator checks that the normalized consecutive ratios of the per-degree
// maxima do not keep growing toward the truncation boundary).
std::optional<GrowthBound> fit_growth(const NCSeries& c, int N, double gevrey);

// Validators for the local-growth theorems; every computed coefficient of
// `result` must respect the stated bound (1e-9 relative slack for rounding).
bool check_wf_local_bound(const GrowthBound& d_bound,
                          const GrowthBound& c_bound, int k,
                          const NCSeries& result, int N);
bool check_mixed_bound(const GrowthBound& c_bound, const GrowthBound& d_bound,
                       int m, const NCSeries& result, int N);

// A(K_c) = 1 / (1 - m K_c ln(1 + 1/(m K_c))).
double antipode_amplification(double K_c, int m);

// K_r M_r^x Gamma(x+1)^r <= Gamma(rx+1) <= K~_r 2^x Gamma(x+1)^r, log domain.
bool gamma_inequality_check(double x, double r);

// Fractional multinomial inequality
// sum C(rn; r i_1, ..., r i_m) x^{r i} <= (1/r)^{2(m-1)} (sum x)^n.
bool neoclassical_check(double r, int m, int n, const std::vector<double>& x);

// E_{alpha,1}(x) = sum x^n / Gamma(alpha n + 1), partial sums to `tol`.
double mittag_leffler(double alpha, double x, double tol = 1e-12);

// seminorm(shuffle of list, eps R) <= prod seminorm(c_i, R) / (1-eps)^k.
bool check_shuffle_seminorm_bound(const std::vector<NCSeries>& cs, double R,
                                  double eps, int N);

// Global seminorm bound for the Wiener-Fliess composition of a proper c
// with a d certified by |(d,eta~)| <= K_d M_d^{|eta~|} (|eta~|!)^{-1+sbar}:
// seminorm(result, eps R) <= K_d Kt_{1-sbar} E_{(1-sbar),1}(2 M_d m
// seminorm(c, R) / (1-eps)), with m the component count of c.
bool check_wf_global_bound(const GrowthBound& d_bound, double sbar,
                           const NCSeries& c, const NCSeries& result,
                           double R, double eps, int N);

// |(e^{shuffle n}, zeta)| <= K_e^n M_e^{|zeta|-nj} |zeta|! C(|zeta|-1, n-1)
// given the certificate |(e, zeta)| <= K_e M_e^{|zeta|-j} |zeta|!.
bool check_shuffle_power_growth(const NCSeries& e, const GrowthBound& e_bound,
                                int j, int n, int N);

}  // namespace fpa

#endif
