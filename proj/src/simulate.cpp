#include "nemineq/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "nemineq/gauss.hpp"
#include "nemineq/norms.hpp"
#include "nemineq/rng.hpp"

namespace nemineq {

namespace {

constexpr long long kBudgetBits = 22;  // at most 2^22 enumerated outcomes

bool componentwise(DistributionSpec::Kind k) {
  return k == DistributionSpec::Kind::uniform_hypercube ||
         k == DistributionSpec::Kind::asym_bernoulli;
}

void validate(const DistributionSpec& dist, CenteringCase ccase, long long d,
              long long n) {
  if (d < 1 || n < 1) {
    throw std::domain_error("ratio: requires d >= 1 and n >= 1");
  }
  if (ccase == CenteringCase::symmetric && !dist.symmetric_law()) {
    throw std::domain_error(
        "ratio: the symmetric case requires a symmetric law");
  }
  switch (dist.kind) {
    case DistributionSpec::Kind::rademacher_basis:
      if (n > d) {
        throw std::domain_error(
            "rademacher_basis: needs n <= d distinct basis vectors");
      }
      break;
    case DistributionSpec::Kind::fixed_vectors:
      if (static_cast<long long>(dist.vectors.size()) != n ||
          dist.vectors.front().size() != d) {
        throw std::domain_error("fixed_vectors: cfg (d, n) mismatch");
      }
      break;
    default:
      break;
  }
}

/// sum_i E ||X_i||_r^2 in closed form.
double denominator(const DistributionSpec& dist, long long d, long long n,
                   const RExponent& r) {
  switch (dist.kind) {
    case DistributionSpec::Kind::rademacher_basis:
      return static_cast<double>(n);  // ||b_i||_r = 1 for every r
    case DistributionSpec::Kind::uniform_hypercube:
    case DistributionSpec::Kind::asym_bernoulli:
      // ||X||_r = d^(1/r) deterministically (1 at r = inf).
      return static_cast<double>(n) *
             std::pow(static_cast<double>(d), 2.0 * r.reciprocal());
    case DistributionSpec::Kind::fixed_vectors: {
      double s = 0.0;
      for (const auto& x : dist.vectors) s += norm_sq(x, r);
      return s;
    }
  }
  throw std::logic_error("denominator: unreachable");
}

/// Per-coordinate value of c = E S_n; nonzero only for the asymmetric
/// Bernoulli law in the general case.
double center_shift(const DistributionSpec& dist, CenteringCase ccase,
                    long long n) {
  if (ccase == CenteringCase::general &&
      dist.kind == DistributionSpec::Kind::asym_bernoulli) {
    return static_cast<double>(n) * (2.0 * dist.p - 1.0);
  }
  return 0.0;
}

double shifted_norm_sq(const Eigen::VectorXd& s, double mu,
                       const RExponent& r) {
  if (mu == 0.0) return norm_sq(s, r);
  return norm_sq((s.array() - mu).matrix(), r);
}

}  // namespace

DistributionSpec DistributionSpec::rademacher_basis() {
  return DistributionSpec{Kind::rademacher_basis, 0.5, {}};
}

DistributionSpec DistributionSpec::uniform_hypercube() {
  return DistributionSpec{Kind::uniform_hypercube, 0.5, {}};
}

DistributionSpec DistributionSpec::asym_bernoulli(double p) {
  if (!(p >= 0.5 && p < 1.0)) {
    throw std::domain_error("asym_bernoulli: requires p in [1/2, 1)");
  }
  return DistributionSpec{Kind::asym_bernoulli, p, {}};
}

DistributionSpec DistributionSpec::fixed_vectors(
    std::vector<Eigen::VectorXd> xs) {
  if (xs.empty()) {
    throw std::domain_error("fixed_vectors: needs at least one vector");
  }
  const Eigen::Index dim = xs.front().size();
  if (dim < 1) throw std::domain_error("fixed_vectors: vectors must be nonempty");
  for (const auto& x : xs) {
    if (x.size() != dim) {
      throw std::domain_error("fixed_vectors: dimensions differ");
    }
  }
  return DistributionSpec{Kind::fixed_vectors, 0.5, std::move(xs)};
}

RatioEstimate estimate_ratio(const DistributionSpec& dist, CenteringCase ccase,
                             const MCConfig& cfg, const RExponent& r) {
  validate(dist, ccase, cfg.d, cfg.n);
  if (cfg.reps < 1) throw std::domain_error("estimate_ratio: requires reps >= 1");
  const double denom = denominator(dist, cfg.d, cfg.n, r);
  const double mu = center_shift(dist, ccase, cfg.n);
  const auto d = static_cast<Eigen::Index>(cfg.d);

  Eigen::VectorXd s(d);
  double sum = 0.0, sum_sq = 0.0;
  for (long long k = 0; k < cfg.reps; ++k) {
    SplitRng rng(cfg.seed, static_cast<std::uint64_t>(k));
    switch (dist.kind) {
      case DistributionSpec::Kind::rademacher_basis:
        s.setZero();
        for (long long i = 0; i < cfg.n; ++i) s(i) = rng.next_sign();
        break;
      case DistributionSpec::Kind::uniform_hypercube:
        // S_j = 2 #(+1 among n fair signs) - n, popcounted 64 bits at a time.
        for (Eigen::Index j = 0; j < d; ++j) {
          long long ones = 0;
          long long rem = cfg.n;
          while (rem >= 64) {
            ones += std::popcount(rng.next_u64());
            rem -= 64;
          }
          if (rem > 0) {
            ones += std::popcount(rng.next_u64() &
                                  ((std::uint64_t{1} << rem) - 1));
          }
          s(j) = static_cast<double>(2 * ones - cfg.n);
        }
        break;
      case DistributionSpec::Kind::asym_bernoulli:
        s.setZero();
        for (long long i = 0; i < cfg.n; ++i) {
          for (Eigen::Index j = 0; j < d; ++j) {
            s(j) += rng.next_unit() < dist.p ? 1.0 : -1.0;
          }
        }
        break;
      case DistributionSpec::Kind::fixed_vectors:
        s.setZero();
        for (long long i = 0; i < cfg.n; ++i) {
          s += static_cast<double>(rng.next_sign()) * dist.vectors[i];
        }
        break;
    }
    const double y = shifted_norm_sq(s, mu, r);
    sum += y;
    sum_sq += y * y;
  }

  const double reps = static_cast<double>(cfg.reps);
  const double mean = sum / reps;
  double std_error = 0.0;
  if (cfg.reps >= 2) {
    const double var = std::max(0.0, (sum_sq - sum * sum / reps) / (reps - 1.0));
    std_error = std::sqrt(var / reps) / denom;
  }
  return RatioEstimate{mean / denom, std_error, ccase, false, mean, denom};
}

RatioEstimate exact_ratio(const DistributionSpec& dist, CenteringCase ccase,
                          long long d, long long n, const RExponent& r) {
  validate(dist, ccase, d, n);
  const long long bits = componentwise(dist.kind) ? n * d : n;
  if (bits > kBudgetBits) {
    throw enumeration_budget_error(
        "exact_ratio: enumeration budget of 2^22 outcomes exceeded");
  }
  const double denom = denominator(dist, d, n, r);
  const double mu = center_shift(dist, ccase, n);
  const auto dim = static_cast<Eigen::Index>(d);
  const std::uint64_t total = std::uint64_t{1} << bits;

  // Outcome weights by popcount; uniform laws have constant weight.
  std::vector<double> weight_by_ones(static_cast<size_t>(bits) + 1);
  if (dist.kind == DistributionSpec::Kind::asym_bernoulli) {
    for (long long k = 0; k <= bits; ++k) {
      weight_by_ones[k] = std::pow(dist.p, static_cast<double>(k)) *
                          std::pow(1.0 - dist.p, static_cast<double>(bits - k));
    }
  } else {
    const double w = std::ldexp(1.0, -static_cast<int>(bits));
    std::fill(weight_by_ones.begin(), weight_by_ones.end(), w);
  }

  Eigen::VectorXd s(dim);
  long double numerator = 0.0L;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    switch (dist.kind) {
      case DistributionSpec::Kind::rademacher_basis:
        s.setZero();
        for (long long i = 0; i < n; ++i) {
          s(i) = (mask >> i) & 1u ? 1.0 : -1.0;
        }
        break;
      case DistributionSpec::Kind::uniform_hypercube:
      case DistributionSpec::Kind::asym_bernoulli:
        s.setZero();
        for (long long i = 0; i < n; ++i) {
          for (Eigen::Index j = 0; j < dim; ++j) {
            s(j) += (mask >> (i * d + j)) & 1u ? 1.0 : -1.0;
          }
        }
        break;
      case DistributionSpec::Kind::fixed_vectors:
        s.setZero();
        for (long long i = 0; i < n; ++i) {
          s += ((mask >> i) & 1u ? 1.0 : -1.0) * dist.vectors[i];
        }
        break;
    }
    numerator += weight_by_ones[std::popcount(mask)] * shifted_norm_sq(s, mu, r);
  }
  const double num = static_cast<double>(numerator);
  return RatioEstimate{num / denom, 0.0, ccase, true, num, denom};
}

double asym_ratio(double p, long long d) {
  if (!(p >= 0.5 && p < 1.0)) {
    throw std::domain_error("asym_ratio: requires p in [1/2, 1)");
  }
  if (d < 1) throw std::domain_error("asym_ratio: requires d >= 1");
  const double q = 1.0 - p;
  const double d_log_p = static_cast<double>(d) * std::log1p(-q);
  const double p_d = std::exp(d_log_p);
  const double one_minus_p_d = -std::expm1(d_log_p);
  return 4.0 * (q * q * p_d + p * p * one_minus_p_d);
}

RatioEstimate type2_ratio_exact(const std::vector<Eigen::VectorXd>& xs) {
  auto spec = DistributionSpec::fixed_vectors(xs);
  const long long d = spec.vectors.front().size();
  const long long n = static_cast<long long>(spec.vectors.size());
  return exact_ratio(spec, CenteringCase::symmetric, d, n,
                     RExponent::infinity());
}

RatioEstimate type2_ratio_mc(const std::vector<Eigen::VectorXd>& xs,
                             long long reps, std::uint64_t seed) {
  auto spec = DistributionSpec::fixed_vectors(xs);
  MCConfig cfg;
  cfg.d = spec.vectors.front().size();
  cfg.n = static_cast<long long>(spec.vectors.size());
  cfg.reps = reps;
  cfg.seed = seed;
  return estimate_ratio(spec, CenteringCase::symmetric, cfg,
                        RExponent::infinity());
}

HoeffdingReport hoeffding_check(const std::vector<double>& a,
                                const std::vector<double>& z_grid,
                                const std::vector<double>& t_grid) {
  if (a.empty()) throw std::domain_error("hoeffding_check: a must be nonempty");
  const auto n = static_cast<long long>(a.size());
  if (n > kBudgetBits) {
    throw enumeration_budget_error(
        "hoeffding_check: enumeration budget of 2^22 outcomes exceeded");
  }
  double v_sq = 0.0;
  for (double ai : a) v_sq += ai * ai;
  if (!(v_sq > 0.0)) {
    throw std::domain_error("hoeffding_check: requires v^2 > 0");
  }

  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<double> abs_sums(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    double sum = 0.0;
    for (long long i = 0; i < n; ++i) {
      sum += (mask >> i) & 1u ? a[i] : -a[i];
    }
    abs_sums[mask] = std::abs(sum);
  }
  std::sort(abs_sums.begin(), abs_sums.end());

  constexpr double kTol = 1e-12;
  HoeffdingReport rep;
  rep.v_sq = v_sq;
  rep.all_ok = true;
  for (double z : z_grid) {
    const auto it = std::lower_bound(abs_sums.begin(), abs_sums.end(), z);
    const double exact =
        static_cast<double>(abs_sums.end() - it) / static_cast<double>(total);
    HoeffdingReport::TailRow row;
    row.z = z;
    row.exact = exact;
    row.hoeffding_bound = 2.0 * std::exp(-z * z / (2.0 * v_sq));
    if (z > 0.0) {
      row.pinelis_bound = pinelis_tail(z, std::sqrt(v_sq), kPinelisKMax);
    }
    row.ok = exact <= row.hoeffding_bound + kTol &&
             (!row.pinelis_bound || exact <= *row.pinelis_bound + kTol);
    rep.all_ok = rep.all_ok && row.ok;
    rep.tails.push_back(row);
  }
  for (double t : t_grid) {
    double mgf = 1.0;
    for (double ai : a) mgf *= std::cosh(t * ai);
    HoeffdingReport::MgfRow row;
    row.t = t;
    row.exact = mgf;
    row.bound = std::exp(t * t * v_sq / 2.0);
    row.ok = mgf <= row.bound * (1.0 + kTol);
    rep.all_ok = rep.all_ok && row.ok;
    rep.mgfs.push_back(row);
  }
  return rep;
}

BernsteinMomentReport bernstein_moment_check(
    const std::vector<Atom>& law, double kappa,
    const std::vector<double>& l_grid) {
  if (law.empty() || law.size() > 64) {
    throw std::domain_error(
        "bernstein_moment_check: needs 1..64 atoms");
  }
  if (!(kappa > 0.0)) {
    throw std::domain_error("bernstein_moment_check: requires kappa > 0");
  }
  double mass = 0.0, mean = 0.0, sigma_sq = 0.0;
  for (const Atom& atom : law) {
    if (!(atom.prob >= 0.0)) {
      throw std::domain_error("bernstein_moment_check: negative probability");
    }
    if (std::abs(atom.value) > kappa * (1.0 + 1e-12)) {
      throw std::domain_error(
          "bernstein_moment_check: support must lie in [-kappa, kappa]");
    }
    mass += atom.prob;
    mean += atom.prob * atom.value;
    sigma_sq += atom.prob * atom.value * atom.value;
  }
  if (std::abs(mass - 1.0) > 1e-12) {
    throw std::domain_error(
        "bernstein_moment_check: probabilities must sum to 1");
  }
  if (std::abs(mean) > 1e-12 * std::max(1.0, kappa)) {
    throw std::domain_error("bernstein_moment_check: law must have mean zero");
  }

  constexpr double kTol = 1e-12;
  BernsteinMomentReport rep;
  rep.sigma_sq = sigma_sq;
  rep.all_ok = true;
  for (double L : l_grid) {
    const double e = bern_e(L);  // throws for L <= 0
    double moment = 0.0;
    for (const Atom& atom : law) {
      moment += atom.prob * std::exp(atom.value / (kappa * L));
    }
    BernsteinMomentReport::Row row;
    row.L = L;
    row.moment = moment;
    row.linear_bound = 1.0 + sigma_sq * e / (kappa * kappa);
    row.exp_bound = std::exp(sigma_sq * e / (kappa * kappa));
    row.ok = moment <= row.linear_bound * (1.0 + kTol) &&
             row.linear_bound <= row.exp_bound * (1.0 + kTol);
    rep.all_ok = rep.all_ok && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace nemineq
