#ifndef NEMINEQ_SIMULATE_HPP
#define NEMINEQ_SIMULATE_HPP

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nemineq/constants.hpp"
#include "nemineq/exponent.hpp"

namespace nemineq {

struct enumeration_budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite-support law of one summand X_i.
struct DistributionSpec {
  enum class Kind {
    rademacher_basis,   // X_i = eps_i b_i, distinct basis vectors (n <= d)
    uniform_hypercube,  // X_i uniform on {-1, 1}^d
    asym_bernoulli,     // components +1 w.p. p, -1 w.p. 1-p, p in [1/2, 1)
    fixed_vectors       // X_i = eps_i x_i for the given x_i
  };

  Kind kind;
  double p = 0.5;
  std::vector<Eigen::VectorXd> vectors;

  static DistributionSpec rademacher_basis();
  static DistributionSpec uniform_hypercube();
  static DistributionSpec asym_bernoulli(double p);
  static DistributionSpec fixed_vectors(std::vector<Eigen::VectorXd> xs);

  bool symmetric_law() const { return kind != Kind::asym_bernoulli; }
};

struct MCConfig {
  long long d = 1;
  long long n = 1;
  long long reps = 1;
  std::uint64_t seed = 0;
};

struct RatioEstimate {
  double ratio;       // numerator / denominator
  double std_error;   // replicate-level standard error / denominator; 0 if exact
  CenteringCase ccase;
  bool exact;
  double numerator;    // E ||S_n - c||_r^2 (estimate or exact)
  double denominator;  // sum_i E ||X_i||_r^2, closed form
};

/// Seeded Monte-Carlo estimate of E||S_n - c||_r^2 / sum E||X_i||_r^2 where
/// c = E S_n (closed form) in the general case and 0 otherwise. Replicate k
/// draws from stream (seed, k); the reduction order is fixed, so results are
/// independent of execution scheduling.
RatioEstimate estimate_ratio(const DistributionSpec& dist, CenteringCase ccase,
                             const MCConfig& cfg, const RExponent& r);

/// Exact ratio by weighted enumeration of the full support. Budget: at most
/// 2^22 outcomes (n * d <= 22 for the componentwise laws, n <= 22 otherwise).
RatioEstimate exact_ratio(const DistributionSpec& dist, CenteringCase ccase,
                          long long d, long long n, const RExponent& r);

/// Closed form 4((1-p)^2 p^d + p^2 (1 - p^d)) for the single-summand
/// asymmetric-Bernoulli ratio, safe for p^d near 0.
double asym_ratio(double p, long long d);

/// Type-2 ratio E||sum eps_i x_i||_inf^2 / sum ||x_i||_inf^2.
RatioEstimate type2_ratio_exact(const std::vector<Eigen::VectorXd>& xs);
RatioEstimate type2_ratio_mc(const std::vector<Eigen::VectorXd>& xs,
                             long long reps, std::uint64_t seed);

/// Exact Rademacher tail probabilities against the Hoeffding and Pinelis
/// bounds, plus exact moment generating function against exp(t^2 v^2/2).
struct HoeffdingReport {
  struct TailRow {
    double z;
    double exact;            // P(|sum a_i eps_i| >= z), enumerated
    double hoeffding_bound;  // 2 exp(-z^2 / (2 v^2))
    std::optional<double> pinelis_bound;  // z > 0 only
    bool ok;
  };
  struct MgfRow {
    double t;
    double exact;  // prod cosh(t a_i)
    double bound;  // exp(t^2 v^2 / 2)
    bool ok;
  };
  double v_sq;
  std::vector<TailRow> tails;
  std::vector<MgfRow> mgfs;
  bool all_ok;
};
HoeffdingReport hoeffding_check(const std::vector<double>& a,
                                const std::vector<double>& z_grid,
                                const std::vector<double>& t_grid);

/// One atom of a finite mean-zero law.
struct Atom {
  double value;
  double prob;
};

/// Exact E exp(Z/(kappa L)) for a finite mean-zero law bounded by kappa,
/// checked against 1 + sigma^2 e(L)/kappa^2 and exp(sigma^2 e(L)/kappa^2).
struct BernsteinMomentReport {
  struct Row {
    double L;
    double moment;
    double linear_bound;
    double exp_bound;
    bool ok;
  };
  double sigma_sq;
  std::vector<Row> rows;
  bool all_ok;
};
BernsteinMomentReport bernstein_moment_check(const std::vector<Atom>& law,
                                             double kappa,
                                             const std::vector<double>& l_grid);

}  // namespace nemineq

#endif  // NEMINEQ_SIMULATE_HPP
