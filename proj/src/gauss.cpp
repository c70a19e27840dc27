#include "nemineq/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nemineq/constants.hpp"
#include "nemineq/minimize.hpp"
#include "nemineq/quadrature.hpp"

namespace nemineq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;
constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;
constexpr double kLog2Pi = 1.8378770664093454835606594728112353;

double pdf(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

double check_dim(long long d, const char* what) {
  if (d < 1) throw std::domain_error(std::string(what) + ": requires d >= 1");
  return std::log(static_cast<double>(d));
}

}  // namespace

GaussianPoint gaussian(double z) {
  // erfc keeps the small tail free of 1 - cdf cancellation.
  return GaussianPoint{pdf(z), 0.5 * std::erfc(-z * kInvSqrt2),
                       0.5 * std::erfc(z * kInvSqrt2)};
}

TailBoundSet tail_bounds(double z) {
  if (!(z > -1.0)) {
    throw std::domain_error("tail_bounds: Komatsu/Qi bounds require z > -1");
  }
  const double p = pdf(z);
  TailBoundSet t;
  t.z = z;
  t.survival = gaussian(z).survival;
  t.komatsu_lower = 2.0 / (z + std::sqrt(z * z + 4.0)) * p;
  t.qi_upper = 4.0 / (3.0 * z + std::sqrt(z * z + 8.0)) * p;
  if (z > 0.0) t.mills = p / z;
  return t;
}

double pinelis_tail(double z, double v, double k_p) {
  if (!(z > 0.0)) throw std::domain_error("pinelis_tail: requires z > 0");
  if (!(v > 0.0)) throw std::domain_error("pinelis_tail: requires v > 0");
  if (!(k_p >= kPinelisKMin && k_p <= kPinelisKMax)) {
    throw std::domain_error("pinelis_tail: k_p must lie in [3.18, 3.22]");
  }
  return 2.0 * k_p * gaussian(z / v).survival;
}

double cd_squared(long long d, double abs_tol) {
  const double ld = check_dim(d, "cd_squared");
  const double dd = static_cast<double>(d);
  auto survival_of_max = [dd](double t) {
    // 1 - (2 Phi(t) - 1)^d via expm1/log1p; a = erfc(t/sqrt 2) = 2(1-Phi(t)).
    const double a = std::erfc(t * kInvSqrt2);
    if (a >= 1.0) return 1.0;
    return -std::expm1(dd * std::log1p(-a));
  };
  auto integrand = [&survival_of_max](double t) {
    return 2.0 * t * survival_of_max(t);
  };
  const double upper = std::sqrt(2.0 * std::log(std::max(dd, 3.0))) + 10.0;
  const double value = adaptive_simpson(integrand, 0.0, upper, abs_tol);
  // Truncation certificate: int_T^inf 2t P(W >= t) dt <= 4d (1 - Phi(T)).
  const double remainder = 4.0 * dd * gaussian(upper).survival;
  if (!(remainder <= 1e-12)) {
    throw std::logic_error("cd_squared: truncation certificate failed");
  }
  (void)ld;
  return value;
}

double h3(double d) {
  const double c = cd_scale_constant();
  if (!(c * d > 1.0)) {
    throw std::domain_error("h3: requires sqrt(2/pi) d > 1");
  }
  const double g = std::log(c * d);
  const double x = 1.0 - std::log(2.0 * g) / (2.0 * g);
  return -std::log(kPi) - std::log(g) +
         8.0 / (3.0 * std::sqrt(x) + std::sqrt(x + 4.0 / g));
}

double cd_upper_corrected(long long d) {
  const double ld = check_dim(d, "cd_upper_corrected");
  if (d < 3) throw std::domain_error("cd_upper_corrected: requires d >= 3");
  const double shifted = ld - 0.5 * kLog2Pi;  // log(d / sqrt(2 pi)) > 0
  return 2.0 * ld - kLog2Pi + 2.0 * std::sqrt(2.0) / std::sqrt(shifted);
}

double cd_lower(long long d, double t_o) {
  check_dim(d, "cd_lower");
  if (!(t_o > 0.0)) throw std::domain_error("cd_lower: requires t_o > 0");
  const double dd = static_cast<double>(d);
  const double n = 4.0 * dd * pdf(t_o) / (t_o + std::sqrt(t_o * t_o + 4.0));
  const double bracket =
      t_o * t_o + 4.0 / (1.0 + std::sqrt(1.0 + 4.0 / (t_o * t_o)));
  return n / (1.0 + n) * bracket;
}

std::optional<double> cd_lower_param_to(long long d, double delta) {
  check_dim(d, "cd_lower_param_to");
  if (!(delta > 0.0)) {
    throw std::domain_error("cd_lower_param_to: requires delta > 0");
  }
  const double cd = cd_scale_constant() * static_cast<double>(d);
  if (cd <= 1.0) return std::nullopt;
  const double log_cd = std::log(cd);
  const double t_sq =
      2.0 * (log_cd - 0.5 * (1.0 + delta) * std::log(2.0 * log_cd));
  if (!(t_sq > 0.0)) return std::nullopt;
  return std::sqrt(t_sq);
}

CdLowerBest cd_lower_best(long long d, double delta) {
  const double ld = check_dim(d, "cd_lower_best");
  auto value_at = [d](double t) { return cd_lower(d, t); };

  const double lo = 0.05;
  const double hi = std::sqrt(2.0 * std::max(ld, 1.0)) + 8.0;
  constexpr int kGridPoints = 512;
  double best_t = lo;
  double best_v = value_at(lo);
  const double step = std::log(hi / lo) / (kGridPoints - 1);
  for (int i = 1; i < kGridPoints; ++i) {
    const double t = lo * std::exp(i * step);
    const double v = value_at(t);
    if (v > best_v) {
      best_v = v;
      best_t = t;
    }
  }
  // Polish around the grid winner; any t_o yields a valid bound, so taking
  // the max stays correct.
  const MinResult polished = golden_section_max(
      value_at, std::max(lo, best_t * std::exp(-step)),
      std::min(hi, best_t * std::exp(step)), 1e-9);
  if (polished.value > best_v) {
    best_v = polished.value;
    best_t = polished.x;
  }
  if (const auto t_param = cd_lower_param_to(d, delta)) {
    const double v = value_at(*t_param);
    if (v > best_v) {
      best_v = v;
      best_t = *t_param;
    }
  }
  return CdLowerBest{best_v, best_t};
}

CdBounds cd_bounds(long long d, double delta) {
  const double ld = check_dim(d, "cd_bounds");
  CdBounds b;
  b.d = d;
  b.exact_sq = cd_squared(d);
  b.lower_sq = cd_lower_best(d, delta).value;
  if (d >= 3) {
    b.upper_simple_sq = 2.0 * ld;
    b.upper_corrected_sq = cd_upper_corrected(d);
  }
  if (cd_scale_constant() * static_cast<double>(d) > 1.0) {
    b.upper_h3_sq = 2.0 * ld + h3(static_cast<double>(d));
  }
  return b;
}

}  // namespace nemineq
