#ifndef NEMINEQ_GAUSS_HPP
#define NEMINEQ_GAUSS_HPP

#include <optional>

namespace nemineq {

struct GaussianPoint {
  double pdf;
  double cdf;
  double survival;  // 1 - cdf, evaluated directly via erfc
};

/// Standard-normal density, distribution function and survival function.
GaussianPoint gaussian(double z);

/// Mills / Komatsu / Qi tail bounds at z; for z > 0 they sandwich the true
/// tail as komatsu <= 1 - Phi(z) <= qi <= mills. Domain: z > -1.
struct TailBoundSet {
  double z;
  double survival;
  double komatsu_lower;  // 2 phi(z) / (z + sqrt(z^2 + 4))
  double qi_upper;       // 4 phi(z) / (3z + sqrt(z^2 + 8))
  std::optional<double> mills;  // phi(z) / z, reported for z > 0 only
};
TailBoundSet tail_bounds(double z);

/// Pinelis bound 2 k_p (1 - Phi(z/v)) on P(|sum a_i eps_i| >= z) with
/// v^2 = sum a_i^2. Requires z > 0, v > 0, k_p in [3.18, 3.22].
double pinelis_tail(double z, double v, double k_p);

/// c_d^2 = E max_j Z_j^2 by adaptive quadrature of
/// int_0^inf 2t (1 - (2 Phi(t) - 1)^d) dt, truncated at
/// T(d) = sqrt(2 log max(d,3)) + 10 with a certified remainder <= 1e-12.
double cd_squared(long long d, double abs_tol = 1e-10);

/// Correction in the third c_d upper bound 2 log d + h3(d); defined for
/// sqrt(2/pi) d > 1, changes sign between d = 13 and d = 14.
double h3(double d);

/// Upper bound 2 log d - log(2 pi) + 2 sqrt(2)/sqrt(log(d / sqrt(2 pi))),
/// valid for d >= 3; dips below 2 log d once log d >= 3.28735...
double cd_upper_corrected(long long d);

/// Lower bound for c_d^2 at truncation level t_o > 0 (valid at every t_o).
double cd_lower(long long d, double t_o);

/// The parametric truncation level t_o^2 = 2 log(cd / (2 log cd)^((1+delta)/2))
/// with c = sqrt(2/pi); empty when the expression is undefined or
/// nonpositive at this d.
std::optional<double> cd_lower_param_to(long long d, double delta);

struct CdLowerBest {
  double value;
  double t_o;
};

/// Best available lower bound: maximum over a log-grid of t_o (polished by
/// golden section) and over the parametric choice above.
CdLowerBest cd_lower_best(long long d, double delta = 0.1);

struct CdBounds {
  long long d;
  double exact_sq;  // quadrature value of c_d^2
  double lower_sq;
  std::optional<double> upper_simple_sq;     // 2 log d, attached for d >= 3
  std::optional<double> upper_corrected_sq;  // attached for d >= 3
  std::optional<double> upper_h3_sq;         // 2 log d + h3(d), d >= 2
};
CdBounds cd_bounds(long long d, double delta = 0.1);

}  // namespace nemineq

#endif  // NEMINEQ_GAUSS_HPP
