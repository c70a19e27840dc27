#ifndef NEMINEQ_CONSTANTS_HPP
#define NEMINEQ_CONSTANTS_HPP

#include <array>
#include <string>
#include <vector>

#include "nemineq/exponent.hpp"

namespace nemineq {

enum class CenteringCase { general, centered, symmetric };
enum class Approach {
  naive,
  nemirovski,
  john,
  type2,
  type2_refined,
  trunc_bernstein
};

std::string to_string(CenteringCase c);
std::string to_string(Approach a);
CenteringCase centering_case_from_string(const std::string& s);

/// Pinelis tail constant interval; the h2 formula below is derived with the
/// upper end 3.22 baked in.
inline constexpr double kPinelisKMin = 3.18;
inline constexpr double kPinelisKMax = 3.22;

/// c = 4 * 3.22 / sqrt(2 pi) = 12.88 / sqrt(2 pi), the scale inside h2.
double h2_scale_constant();
/// c = sqrt(2 / pi), the scale in the c_d upper- and lower-bound choices.
double cd_scale_constant();

/// First-solution constant: d^(2/r - 1) for r <= 2, d^(1 - 2/r) for r >= 2.
double k_naive(long long d, const RExponent& r);

/// Critical exponent r_d = log d + sqrt((log d - 2) log d); the interior
/// minimizer of q -> (q - 1) d^(2/q). Defined for d >= 8.
double r_critical(long long d);
double r_critical_log(double log_d);

struct KNem {
  double k;
  double q_star;
};

/// K_Nem(d, r) = inf over q in [2, r] of (q - 1) d^(2/q - 2/r), with its
/// minimizer. Requires r >= 2; r may be infinite.
KNem k_nem(long long d, const RExponent& r);
KNem k_nem_log(double log_d, const RExponent& r);

/// Closed-form l_inf rows: 2e log d - e (centered, symmetric) and
/// 8e log d - 4e (general). Requires d >= 3.
double k_nem_case(long long d, CenteringCase c);
double k_nem_case_log(double log_d, CenteringCase c);

/// John's theorem route: K = dim(B) = d.
double k_john(long long d);

/// Khintchine constant B_r = sqrt(2) (Gamma((r+1)/2) / sqrt(pi))^(1/r),
/// evaluated through log-Gamma so large r cannot overflow.
double haagerup_b(double r);

/// Type-2 route for L_r, r in [2, inf): K = 4 B_r^2.
double k_type2_lr(double r);

/// Correction term in the refined type-2 constant, h2(d) <= 3 for d >= 1.
double h2(double d);
double h2_log(double log_d);

/// Type-2 route for l_inf: 8 log(2d), refined 8 log d + 4 h2(d); a quarter of
/// either in the symmetric case.
double k_type2_linf(long long d, CenteringCase c, bool refined);
double k_type2_linf_log(double log_d, CenteringCase c, bool refined);

/// e(L) = exp(1/L) - 1 - 1/L, strictly decreasing, -> 0 as L -> inf.
double bern_e(double L);

/// Coefficient 2 sqrt(L^2 e(L) + 4L) (general, centered) or
/// 2 sqrt(L^2 e(L) + 2L) (symmetric) in front of sqrt(log(2d)).
double trbern_coeff(double L, CenteringCase c);

/// Truncation/Bernstein constants with the published coefficients:
/// (1 + 3.46 sqrt(log 2d))^2, symmetric (1 + 2.9 sqrt(log 2d))^2.
double k_trbern(long long d, CenteringCase c);
double k_trbern_log(double log_d, CenteringCase c);

/// alpha, beta and the minimizing truncation level kappa_o for given L,
/// dimension and variance budget gamma = sum E||X_i||_inf^2.
struct BernsteinParams {
  double L;
  double e_of_L;
  double alpha;
  double beta;
  double kappa_o;  // sqrt(beta / alpha)
};
BernsteinParams bernstein_params(double L, long long d, double gamma,
                                 CenteringCase c);

struct ConstantRow {
  Approach approach;
  CenteringCase ccase;
  long long d;
  double k;
};

/// All 4 approaches x 3 cases for l_inf at dimension d >= 3, matching the
/// individual functions above exactly.
std::vector<ConstantRow> table_rows(long long d);

/// Large-d limits K* = lim K(d, inf) / log d per approach and case
/// (order: general, centered, symmetric), plus the three cross-approach
/// ratio limits in the centered case.
struct LimitRatios {
  double trbern_over_nem;    // 3.46^2 / (2e)
  double type2_over_nem;     // 4 / e
  double trbern_over_type2;  // 3.46^2 / 8
  std::array<double, 3> nem_kstar;
  std::array<double, 3> type2_kstar;
  std::array<double, 3> trbern_kstar;
};
LimitRatios limit_ratios();

}  // namespace nemineq

#endif  // NEMINEQ_CONSTANTS_HPP
