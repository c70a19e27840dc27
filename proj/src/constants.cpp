#include "nemineq/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nemineq/minimize.hpp"

namespace nemineq {

namespace {

constexpr double kE = 2.718281828459045235360287471352662498;
constexpr double kPi = 3.141592653589793238462643383279502884;

double require_positive_dim(long long d, const char* what) {
  if (d < 1) throw std::domain_error(std::string(what) + ": requires d >= 1");
  return std::log(static_cast<double>(d));
}

}  // namespace

std::string to_string(CenteringCase c) {
  switch (c) {
    case CenteringCase::general: return "general";
    case CenteringCase::centered: return "centered";
    case CenteringCase::symmetric: return "symmetric";
  }
  return "?";
}

std::string to_string(Approach a) {
  switch (a) {
    case Approach::naive: return "naive";
    case Approach::nemirovski: return "nemirovski";
    case Approach::john: return "john";
    case Approach::type2: return "type2";
    case Approach::type2_refined: return "type2_refined";
    case Approach::trunc_bernstein: return "trunc_bernstein";
  }
  return "?";
}

CenteringCase centering_case_from_string(const std::string& s) {
  if (s == "general") return CenteringCase::general;
  if (s == "centered") return CenteringCase::centered;
  if (s == "symmetric") return CenteringCase::symmetric;
  throw std::domain_error("unknown centering case: " + s);
}

double h2_scale_constant() { return 12.88 / std::sqrt(2.0 * kPi); }

double cd_scale_constant() { return std::sqrt(2.0 / kPi); }

double k_naive(long long d, const RExponent& r) {
  const double ld = require_positive_dim(d, "k_naive");
  if (r.is_infinite()) return std::exp(ld);
  const double rv = r.value();
  const double expo = rv <= 2.0 ? 2.0 / rv - 1.0 : 1.0 - 2.0 / rv;
  return std::exp(ld * expo);
}

double r_critical_log(double log_d) {
  if (!(log_d >= 2.0)) {
    throw std::domain_error(
        "r_critical: requires log d >= 2 (no interior critical point below)");
  }
  return log_d + std::sqrt((log_d - 2.0) * log_d);
}

double r_critical(long long d) {
  if (d < 8) {
    throw std::domain_error("r_critical: requires d >= 8");
  }
  return r_critical_log(std::log(static_cast<double>(d)));
}

KNem k_nem_log(double log_d, const RExponent& r) {
  if (!(log_d >= 0.0)) throw std::domain_error("k_nem: requires d >= 1");
  if (!r.is_infinite() && r.value() < 2.0) {
    throw std::domain_error("k_nem: requires r >= 2");
  }
  const double two_over_r = 2.0 * r.reciprocal();
  auto objective = [log_d, two_over_r](double q) {
    return (q - 1.0) * std::exp(log_d * (2.0 / q - two_over_r));
  };

  // Search window: h(q) = (q-1) d^(2/q) increases beyond r_d < 2 log d, so
  // [2, 4 log d + 4] always contains the minimizer.
  double q_hi = 4.0 * log_d + 4.0;
  if (!r.is_infinite()) q_hi = std::min(q_hi, r.value());
  if (q_hi <= 2.0) return KNem{objective(2.0), 2.0};

  // Closed-form seed: interior critical point exists only for log d > 2.
  double q_seed = 2.0;
  if (log_d > 2.0) {
    q_seed = std::min(r_critical_log(log_d),
                      r.is_infinite() ? q_hi : r.value());
    q_seed = std::max(q_seed, 2.0);
  }

  double best_q = q_seed;
  double best_k = objective(q_seed);
  auto consider = [&](double q) {
    const double k = objective(q);
    // Strict improvement beyond rounding keeps q_star at the clean
    // analytic value when the candidates tie.
    if (k < best_k * (1.0 - 1e-13)) {
      best_k = k;
      best_q = q;
    }
  };
  consider(2.0);
  if (!r.is_infinite() && r.value() <= q_hi) consider(r.value());
  const MinResult refined = golden_section_min(objective, 2.0, q_hi, 1e-10);
  consider(refined.x);
  return KNem{best_k, best_q};
}

KNem k_nem(long long d, const RExponent& r) {
  return k_nem_log(require_positive_dim(d, "k_nem"), r);
}

double k_nem_case_log(double log_d, CenteringCase c) {
  if (!(log_d >= std::log(3.0) * (1.0 - 1e-12))) {
    throw std::domain_error("k_nem_case: formula stated for d >= 3");
  }
  const double centered = 2.0 * kE * log_d - kE;
  return c == CenteringCase::general ? 4.0 * centered : centered;
}

double k_nem_case(long long d, CenteringCase c) {
  if (d < 3) throw std::domain_error("k_nem_case: formula stated for d >= 3");
  return k_nem_case_log(std::log(static_cast<double>(d)), c);
}

double k_john(long long d) {
  require_positive_dim(d, "k_john");
  return static_cast<double>(d);
}

double haagerup_b(double r) {
  if (!(r >= 2.0) || std::isinf(r)) {
    throw std::domain_error("haagerup_b: requires 2 <= r < inf");
  }
  const double log_b =
      0.5 * std::log(2.0) +
      (std::lgamma((r + 1.0) / 2.0) - 0.5 * std::log(kPi)) / r;
  return std::exp(log_b);
}

double k_type2_lr(double r) {
  const double b = haagerup_b(r);
  return 4.0 * b * b;
}

double h2_log(double log_d) {
  if (!(log_d >= 0.0)) throw std::domain_error("h2: requires d >= 1");
  const double lc2 = std::log(h2_scale_constant() / 2.0);
  const double a = 2.0 * (log_d + lc2);        // 2 log(c d / 2)
  const double b = a - std::log(a);            // 2 log(c d / (2 sqrt(a/..)))
  return 2.0 * lc2 - std::log(a) +
         8.0 * std::sqrt(a) / (3.0 * std::sqrt(b) + std::sqrt(b + 8.0));
}

double h2(double d) {
  if (!(d >= 1.0)) throw std::domain_error("h2: requires d >= 1");
  return h2_log(std::log(d));
}

double k_type2_linf_log(double log_d, CenteringCase c, bool refined) {
  if (!(log_d >= 0.0)) throw std::domain_error("k_type2_linf: requires d >= 1");
  const double base = refined
                          ? 8.0 * log_d + 4.0 * h2_log(log_d)
                          : 8.0 * (std::log(2.0) + log_d);
  return c == CenteringCase::symmetric ? base / 4.0 : base;
}

double k_type2_linf(long long d, CenteringCase c, bool refined) {
  return k_type2_linf_log(require_positive_dim(d, "k_type2_linf"), c, refined);
}

double bern_e(double L) {
  if (!(L > 0.0)) throw std::domain_error("bern_e: requires L > 0");
  return std::expm1(1.0 / L) - 1.0 / L;
}

double trbern_coeff(double L, CenteringCase c) {
  const double e = bern_e(L);
  const double lin = c == CenteringCase::symmetric ? 2.0 * L : 4.0 * L;
  return 2.0 * std::sqrt(L * L * e + lin);
}

double k_trbern_log(double log_d, CenteringCase c) {
  if (!(log_d >= 0.0)) throw std::domain_error("k_trbern: requires d >= 1");
  const double coeff = c == CenteringCase::symmetric ? 2.9 : 3.46;
  const double s = 1.0 + coeff * std::sqrt(std::log(2.0) + log_d);
  return s * s;
}

double k_trbern(long long d, CenteringCase c) {
  return k_trbern_log(require_positive_dim(d, "k_trbern"), c);
}

BernsteinParams bernstein_params(double L, long long d, double gamma,
                                 CenteringCase c) {
  require_positive_dim(d, "bernstein_params");
  const double ld2 = std::log(2.0 * static_cast<double>(d));
  const double e = bern_e(L);
  if (!(gamma > 0.0)) {
    throw std::domain_error("bernstein_params: requires gamma > 0");
  }
  double alpha, beta;
  if (c == CenteringCase::symmetric) {
    alpha = L * ld2;
    beta = gamma * (L * e + 2.0);
  } else {
    alpha = 2.0 * L * ld2;
    beta = gamma * (L * e + 4.0) / 2.0;
  }
  return BernsteinParams{L, e, alpha, beta, std::sqrt(beta / alpha)};
}

std::vector<ConstantRow> table_rows(long long d) {
  if (d < 3) throw std::domain_error("table_rows: requires d >= 3");
  static constexpr CenteringCase kCases[] = {
      CenteringCase::general, CenteringCase::centered, CenteringCase::symmetric};
  std::vector<ConstantRow> rows;
  rows.reserve(12);
  for (CenteringCase c : kCases) {
    rows.push_back({Approach::nemirovski, c, d, k_nem_case(d, c)});
  }
  for (CenteringCase c : kCases) {
    rows.push_back({Approach::type2, c, d, k_type2_linf(d, c, false)});
  }
  for (CenteringCase c : kCases) {
    rows.push_back({Approach::type2_refined, c, d, k_type2_linf(d, c, true)});
  }
  for (CenteringCase c : kCases) {
    rows.push_back({Approach::trunc_bernstein, c, d, k_trbern(d, c)});
  }
  return rows;
}

LimitRatios limit_ratios() {
  LimitRatios l;
  l.trbern_over_nem = 3.46 * 3.46 / (2.0 * kE);
  l.type2_over_nem = 4.0 / kE;
  l.trbern_over_type2 = 3.46 * 3.46 / 8.0;
  l.nem_kstar = {8.0 * kE, 2.0 * kE, 2.0 * kE};
  l.type2_kstar = {8.0, 8.0, 2.0};
  l.trbern_kstar = {3.46 * 3.46, 3.46 * 3.46, 2.9 * 2.9};
  return l;
}

}  // namespace nemineq
