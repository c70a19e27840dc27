#ifndef NEMINEQ_NORMS_HPP
#define NEMINEQ_NORMS_HPP

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>

#include "nemineq/exponent.hpp"

namespace nemineq {

/// ||x||_r = (sum |x_j|^r)^(1/r), max_j |x_j| at r = inf.
/// Scaled by the max component so large entries cannot overflow |x_j|^r.
template <typename Derived>
double r_norm(const Eigen::MatrixBase<Derived>& x, const RExponent& r) {
  if (x.size() == 0) return 0.0;
  const double m = x.derived().cwiseAbs().maxCoeff();
  if (m == 0.0 || r.is_infinite()) return m;
  const double rv = r.value();
  double sum = 0.0;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    sum += std::pow(std::abs(x.derived()(j)) / m, rv);
  }
  return m * std::pow(sum, 1.0 / rv);
}

/// V(f) = ||f||_r^2.
template <typename Derived>
double norm_sq(const Eigen::MatrixBase<Derived>& f, const RExponent& r) {
  const double n = r_norm(f, r);
  return n * n;
}

/// Gradient of V at f: h(f) = 2 ||f||_r^(2-r) |f_j|^(r-2) f_j, with h(0) = 0.
/// Computed as 2 (|f_j|/||f||)^(r-2) f_j so no intermediate overflows.
inline Eigen::VectorXd norm_sq_gradient(const Eigen::Ref<const Eigen::VectorXd>& f,
                                        const RExponent& r) {
  require_smooth_exponent(r, "norm_sq_gradient");
  const double nrm = r_norm(f, r);
  if (nrm == 0.0) return Eigen::VectorXd::Zero(f.size());
  const double rv = r.value();
  Eigen::VectorXd h(f.size());
  for (Eigen::Index j = 0; j < f.size(); ++j) {
    // pow(q, 0) = 1 at r = 2, so h(f) = 2 f there, including zero entries.
    h(j) = 2.0 * std::pow(std::abs(f(j)) / nrm, rv - 2.0) * f(j);
  }
  return h;
}

/// DV(f, g) = <h(f), g>, the one-sided derivative of t -> V(f + t g) at 0.
inline double directional_derivative(const Eigen::Ref<const Eigen::VectorXd>& f,
                                     const Eigen::Ref<const Eigen::VectorXd>& g,
                                     const RExponent& r) {
  if (f.size() != g.size()) {
    throw std::domain_error("directional_derivative: dimension mismatch");
  }
  return norm_sq_gradient(f, r).dot(g);
}

struct SandwichSlack {
  double lower;  // V(f+g) - V(f) - DV(f,g), nonnegative by convexity
  double upper;  // V(f) + DV(f,g) + (r-1) V(g) - V(f+g), nonnegative
};

/// Slacks of V(f) + DV(f,g) <= V(f+g) <= V(f) + DV(f,g) + (r-1) V(g).
inline SandwichSlack sandwich_slack(const Eigen::Ref<const Eigen::VectorXd>& f,
                                    const Eigen::Ref<const Eigen::VectorXd>& g,
                                    const RExponent& r) {
  if (f.size() != g.size()) {
    throw std::domain_error("sandwich_slack: dimension mismatch");
  }
  require_smooth_exponent(r, "sandwich_slack");
  const double vf = norm_sq(f, r);
  const double vg = norm_sq(g, r);
  const double vfg = norm_sq((f + g).eval(), r);
  const double dv = directional_derivative(f, g, r);
  return SandwichSlack{vfg - vf - dv, vf + dv + (r.value() - 1.0) * vg - vfg};
}

/// (V(f + t g_o) - V(f) - DV(f, t g_o)) / V(t g_o). Requires unit-magnitude
/// entries and <f, g_o> = 0; tends to r - 1 as t -> 0.
inline double sharpness_ratio(const Eigen::Ref<const Eigen::VectorXd>& f,
                              const Eigen::Ref<const Eigen::VectorXd>& g_o,
                              double t, const RExponent& r) {
  if (f.size() != g_o.size()) {
    throw std::domain_error("sharpness_ratio: dimension mismatch");
  }
  require_smooth_exponent(r, "sharpness_ratio");
  if (t == 0.0 || std::isnan(t)) {
    throw std::domain_error("sharpness_ratio: t must be nonzero");
  }
  constexpr double kTol = 1e-12;
  for (Eigen::Index j = 0; j < f.size(); ++j) {
    if (std::abs(std::abs(f(j)) - 1.0) > kTol ||
        std::abs(std::abs(g_o(j)) - 1.0) > kTol) {
      throw std::domain_error("sharpness_ratio: entries must have magnitude 1");
    }
  }
  if (std::abs(f.dot(g_o)) > kTol * static_cast<double>(f.size())) {
    throw std::domain_error("sharpness_ratio: f and g_o must be orthogonal");
  }
  const double vf = norm_sq(f, r);
  const double vfg = norm_sq((f + t * g_o).eval(), r);
  const double dv = t * directional_derivative(f, g_o, r);
  const double vtg = t * t * norm_sq(g_o, r);
  return (vfg - vf - dv) / vtg;
}

}  // namespace nemineq

#endif  // NEMINEQ_NORMS_HPP
