#include <doctest.h>

#include <cmath>
#include <vector>

#include "nemineq/constants.hpp"
#include "oracles.hpp"

using namespace nemineq;

namespace {
constexpr double kE = 2.718281828459045235360287471352662498;
const RExponent kInf = RExponent::infinity();
}  // namespace

TEST_CASE("k_naive closed forms") {
  CHECK(k_naive(9, RExponent(1.0)) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(k_naive(5, RExponent(2.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(k_naive(123, RExponent(2.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(k_naive(4, kInf) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK_THROWS_AS(k_naive(0, kInf), std::domain_error);
}

TEST_CASE("r_critical value and bracket") {
  CHECK(r_critical(8) == doctest::Approx(2.4858822408).epsilon(1e-10));
  CHECK(std::abs(r_critical(8) - 2.4858) <= 1e-3);
  for (long long d : {8, 55, 1000, 1000000}) {
    const double ld = std::log(static_cast<double>(d));
    const double rd = r_critical(d);
    CHECK(rd > 2.0 * ld - 2.0);
    CHECK(rd < 2.0 * ld);
  }
  CHECK_THROWS_AS(r_critical(7), std::domain_error);
}

TEST_CASE("k_nem closed-form cases") {
  // d <= 7: minimum sits at q = 2, k = d^(1 - 2/r).
  const double rs[] = {2.0, 2.5, 3.0, 5.0, 10.0};
  for (long long d = 1; d <= 7; ++d) {
    for (double rv : rs) {
      const KNem k = k_nem(d, RExponent(rv));
      const double expect = std::pow(static_cast<double>(d), 1.0 - 2.0 / rv);
      CHECK(std::abs(k.k - expect) <= 1e-12 * expect);
      CHECK(k.q_star == 2.0);
    }
    const KNem ki = k_nem(d, kInf);
    CHECK(std::abs(ki.k - static_cast<double>(d)) <= 1e-12 * d);
  }

  // d = 8, r = 2.4 < r_d: minimum at q = r, value r - 1.
  const KNem k8 = k_nem(8, RExponent(2.4));
  CHECK(k8.k == doctest::Approx(1.4).epsilon(1e-13));
  CHECK(k8.q_star == doctest::Approx(2.4).epsilon(1e-13));

  // d = 1e6: k lands inside the Theorem bracket.
  const KNem k6 = k_nem(1000000, kInf);
  const double ld = std::log(1e6);
  CHECK(k6.k >= 2.0 * kE * ld - 3.0 * kE);
  CHECK(k6.k <= 2.0 * kE * ld - kE);
  CHECK(k6.k == doctest::Approx(72.3382111).epsilon(1e-7));

  CHECK_THROWS_AS(k_nem(10, RExponent(1.5)), std::domain_error);
}

TEST_CASE("k_nem agrees with grid search and dominates nothing it should not") {
  for (long long d : {2, 5, 8, 40, 1000, 250000}) {
    const double ld = std::log(static_cast<double>(d));
    for (double rv : {2.0, 2.5, 4.0, 16.0}) {
      const KNem k = k_nem(d, RExponent(rv));
      const double grid =
          oracles::k_nem_grid_min(ld, 2.0 / rv, rv, 100000);
      CHECK(std::abs(k.k - grid) <= 1e-8 * grid);
      CHECK(k.k <= k_naive(d, RExponent(rv)) * (1.0 + 1e-12));
      CHECK(k.k <= (rv - 1.0) * (1.0 + 1e-12));
    }
    const KNem ki = k_nem(d, kInf);
    const double q_hi = std::max(2.5, 4.0 * ld + 4.0);
    const double grid = oracles::k_nem_grid_min(ld, 0.0, q_hi, 100000);
    CHECK(std::abs(ki.k - grid) <= 1e-8 * grid);
    if (d >= 3) CHECK(ki.k <= 2.0 * kE * ld - kE + 1e-12);
  }
}

TEST_CASE("k_nem(d, inf) bracket holds from d = 3 on") {
  for (long long d : {3, 4, 5, 6, 7, 8, 12, 100, 4096}) {
    const double ld = std::log(static_cast<double>(d));
    const double k = k_nem(d, kInf).k;
    CHECK(k >= 2.0 * kE * ld - 3.0 * kE - 1e-12);
    CHECK(k <= 2.0 * kE * ld - kE + 1e-12);
  }
}

TEST_CASE("k_nem q_star matches min(r, r_critical) for d >= 8") {
  for (long long d : {8, 20, 1000, 77777}) {
    const double rd = r_critical(d);
    CHECK(std::abs(k_nem(d, kInf).q_star - rd) <= 1e-9);
    CHECK(std::abs(k_nem(d, RExponent(1000.0)).q_star - std::min(1000.0, rd)) <=
          1e-9);
    CHECK(k_nem(d, RExponent(2.2)).q_star == doctest::Approx(2.2));
  }
}

TEST_CASE("h(q) = (q-1) d^(2/q) decreases left of r_d, increases right of it") {
  for (long long d : {8, 100, 100000}) {
    const double ld = std::log(static_cast<double>(d));
    const double rd = r_critical(d);
    auto h = [ld](double q) { return (q - 1.0) * std::exp(2.0 * ld / q); };
    for (double f : {0.3, 0.6, 0.9}) {
      const double q_left = 2.0 + f * (rd - 2.0);
      CHECK(h(q_left) >= h(std::min(rd, q_left + 1e-3)));
      const double q_right = rd + f * rd;
      CHECK(h(q_right + 1e-3) >= h(q_right));
    }
  }
}

TEST_CASE("k_nem_case table rows") {
  CHECK(k_nem_case(3, CenteringCase::centered) ==
        doctest::Approx(2.0 * kE * std::log(3.0) - kE).epsilon(1e-15));
  CHECK(std::abs(k_nem_case(3, CenteringCase::centered) - 3.2543938) <= 1e-6);
  CHECK(k_nem_case(3, CenteringCase::general) ==
        doctest::Approx(4.0 * k_nem_case(3, CenteringCase::centered))
            .epsilon(1e-15));
  for (long long d : {3, 10, 1000}) {
    CHECK(k_nem_case(d, CenteringCase::symmetric) ==
          k_nem_case(d, CenteringCase::centered));
  }
  CHECK_THROWS_AS(k_nem_case(2, CenteringCase::centered), std::domain_error);
}

TEST_CASE("k_john equals dimension and matches k_naive at r = 1") {
  CHECK(k_john(1) == 1.0);
  CHECK(k_john(9) == 9.0);
  for (long long d : {1, 2, 17, 1000}) {
    CHECK(k_john(d) == doctest::Approx(k_naive(d, RExponent(1.0))).epsilon(1e-13));
  }
}

TEST_CASE("log-gamma backing haagerup_b is accurate to 1e-12 on [1, 1e4]") {
  // Exact anchors: Gamma(1.5) = sqrt(pi)/2, Gamma(2.5) = 3 sqrt(pi)/4,
  // integer factorials, and the duplication formula at half-integers.
  const double half_log_pi = 0.5 * std::log(M_PI);
  CHECK(std::abs(std::lgamma(1.5) - (half_log_pi - std::log(2.0))) <= 1e-14);
  CHECK(std::abs(std::lgamma(2.5) -
                 (std::log(3.0) + half_log_pi - std::log(4.0))) <= 1e-14);
  double log_fact = 0.0;
  for (int k = 2; k <= 170; ++k) {
    log_fact += std::log(static_cast<double>(k));
    CHECK(std::abs(std::lgamma(static_cast<double>(k) + 1.0) - log_fact) <=
          1e-12 * std::max(1.0, log_fact));
  }
  // Duplication: lgamma(2z) = lgamma(z) + lgamma(z+1/2) + (2z-1) log 2
  //              - 0.5 log pi, probed across [1, 1e4].
  for (double z : {1.0, 7.5, 42.0, 333.25, 2500.0, 5000.0}) {
    const double lhs = std::lgamma(2.0 * z);
    const double rhs = std::lgamma(z) + std::lgamma(z + 0.5) +
                       (2.0 * z - 1.0) * std::log(2.0) - half_log_pi;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("haagerup_b values and asymptote") {
  CHECK(haagerup_b(2.0) == doctest::Approx(1.0).epsilon(1e-14));
  // B_4 = sqrt(2) (3/4)^(1/4) from Gamma(5/2) = 3 sqrt(pi) / 4.
  CHECK(haagerup_b(4.0) ==
        doctest::Approx(std::sqrt(2.0) * std::pow(0.75, 0.25)).epsilon(1e-14));
  CHECK(std::abs(haagerup_b(4.0) - 1.31607) <= 1e-5);
  CHECK(std::abs(haagerup_b(1e4) / 1e2 - std::exp(-0.5)) <= 1e-3);
  CHECK_THROWS_AS(haagerup_b(1.9), std::domain_error);
}

TEST_CASE("k_type2_lr values") {
  CHECK(k_type2_lr(2.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(k_type2_lr(4.0) == doctest::Approx(6.9282032).epsilon(1e-7));
  // For large r the type-2 route loses to K = r - 1.
  for (double rv : {60.0, 100.0, 400.0}) {
    CHECK(k_type2_lr(rv) > rv - 1.0);
  }
}

TEST_CASE("h2 stays below 3, changes sign near 4.138e10") {
  for (double ld = 0.0; ld <= 12.0 * std::log(10.0); ld += 0.05) {
    CHECK(h2_log(ld) <= 3.0);
  }
  CHECK(h2(1.0) == doctest::Approx(2.9696449).epsilon(1e-7));
  CHECK(h2(4.1e10) > 0.0);
  CHECK(h2(4.2e10) < 0.0);
  CHECK_THROWS_AS(h2(0.5), std::domain_error);
}

TEST_CASE("h2 large-d behavior") {
  // h2(d) + log log d tends to 2 log(c/2) - log 2 + 2; at d = 1e100 the
  // ratio h2 / (-log log d) is still only ~0.41, far from its limit 1.
  const double ld100 = 100.0 * std::log(10.0);
  CHECK(h2_log(ld100) == doctest::Approx(-2.2402391).epsilon(1e-6));
  double prev = h2_log(ld100) / -std::log(ld100);
  for (double ld : {1e4, 1e6}) {
    const double ratio = h2_log(ld) / -std::log(ld);
    CHECK(ratio > prev);
    prev = ratio;
  }
  CHECK(std::abs(h2_log(1e6) / -std::log(1e6) - 1.0) < 0.25);
}

TEST_CASE("k_type2_linf rows") {
  CHECK(k_type2_linf(1, CenteringCase::centered, false) ==
        doctest::Approx(8.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(k_type2_linf(1000, CenteringCase::centered, false) ==
        doctest::Approx(8.0 * std::log(2000.0)).epsilon(1e-14));
  CHECK(std::abs(k_type2_linf(1000, CenteringCase::centered, false) - 60.811) <=
        5e-3);
  for (long long d : {1, 2, 10, 100000}) {
    for (bool refined : {false, true}) {
      CHECK(k_type2_linf(d, CenteringCase::symmetric, refined) ==
            doctest::Approx(k_type2_linf(d, CenteringCase::centered, refined) /
                            4.0)
                .epsilon(1e-15));
      CHECK(k_type2_linf(d, CenteringCase::general, refined) ==
            k_type2_linf(d, CenteringCase::centered, refined));
    }
  }
}

TEST_CASE("bern_e values and monotonicity") {
  CHECK(bern_e(1.0) == doctest::Approx(kE - 2.0).epsilon(1e-14));
  CHECK(bern_e(0.5) == doctest::Approx(kE * kE - 3.0).epsilon(1e-14));
  CHECK(bern_e(0.407) == doctest::Approx(8.2127759).epsilon(1e-7));
  double prev = bern_e(0.1);
  for (double L = 0.2; L <= 30.0; L += 0.1) {
    const double e = bern_e(L);
    CHECK(e < prev);
    prev = e;
  }
  CHECK(bern_e(1e6) <= 1e-6);
  CHECK_THROWS_AS(bern_e(0.0), std::domain_error);
}

TEST_CASE("trbern_coeff at the published L values and at the optimum") {
  const double c_centered = trbern_coeff(0.407, CenteringCase::centered);
  CHECK(c_centered == doctest::Approx(3.4574199).epsilon(1e-7));
  CHECK(c_centered <= 3.46);
  const double c_sym = trbern_coeff(0.5, CenteringCase::symmetric);
  CHECK(c_sym == doctest::Approx(2.8963867).epsilon(1e-7));
  CHECK(c_sym <= 2.9);

  const auto min_c = oracles::scan_min(
      [](double L) { return trbern_coeff(L, CenteringCase::centered); }, 0.05,
      3.0, 4000);
  CHECK(min_c[1] <= 3.46);
  CHECK(min_c[1] <= c_centered + 1e-12);
  const auto min_s = oracles::scan_min(
      [](double L) { return trbern_coeff(L, CenteringCase::symmetric); }, 0.05,
      3.0, 4000);
  CHECK(min_s[1] <= 2.9);
  CHECK(min_s[1] <= c_sym + 1e-12);
}

TEST_CASE("k_trbern closed forms") {
  // (1 + 3.46 sqrt(log 2))^2 at d = 1.
  CHECK(k_trbern(1, CenteringCase::centered) ==
        doctest::Approx(15.0593587).epsilon(1e-8));
  CHECK(k_trbern(1000, CenteringCase::centered) ==
        doctest::Approx(111.0732200).epsilon(1e-8));
  CHECK(k_trbern(1000, CenteringCase::symmetric) ==
        doctest::Approx(80.9140355).epsilon(1e-8));
  CHECK(k_trbern(50, CenteringCase::general) ==
        k_trbern(50, CenteringCase::centered));
}

TEST_CASE("bernstein_params invariants") {
  const BernsteinParams b =
      bernstein_params(0.407, 100, 2.5, CenteringCase::centered);
  CHECK(b.e_of_L == doctest::Approx(bern_e(0.407)).epsilon(1e-15));
  CHECK(b.kappa_o == doctest::Approx(std::sqrt(b.beta / b.alpha)).epsilon(1e-15));
  CHECK(b.alpha == doctest::Approx(2.0 * 0.407 * std::log(200.0)).epsilon(1e-15));
  CHECK(b.beta ==
        doctest::Approx(2.5 * (0.407 * b.e_of_L + 4.0) / 2.0).epsilon(1e-15));
  // 2 sqrt(alpha beta) recovers coeff * sqrt(log 2d) * sqrt(gamma).
  CHECK(2.0 * std::sqrt(b.alpha * b.beta) ==
        doctest::Approx(trbern_coeff(0.407, CenteringCase::centered) *
                        std::sqrt(std::log(200.0)) * std::sqrt(2.5))
            .epsilon(1e-13));
  const BernsteinParams bs =
      bernstein_params(0.5, 100, 2.5, CenteringCase::symmetric);
  CHECK(bs.alpha == doctest::Approx(0.5 * std::log(200.0)).epsilon(1e-15));
  CHECK(bs.beta == doctest::Approx(2.5 * (0.5 * bs.e_of_L + 2.0)).epsilon(1e-15));
}

TEST_CASE("table_rows: 12 rows matching the individual operations") {
  const auto rows = table_rows(3);
  CHECK(rows.size() == 12);
  int checked = 0;
  for (const ConstantRow& row : rows) {
    CHECK(row.d == 3);
    CHECK(row.k > 0.0);
    double expect = 0.0;
    switch (row.approach) {
      case Approach::nemirovski: expect = k_nem_case(3, row.ccase); break;
      case Approach::type2: expect = k_type2_linf(3, row.ccase, false); break;
      case Approach::type2_refined:
        expect = k_type2_linf(3, row.ccase, true);
        break;
      case Approach::trunc_bernstein: expect = k_trbern(3, row.ccase); break;
      default: continue;
    }
    CHECK(row.k == expect);  // bit-identical to the operation itself
    ++checked;
  }
  CHECK(checked == 12);
  CHECK_THROWS_AS(table_rows(2), std::domain_error);
}

TEST_CASE("table_rows: symmetric <= centered <= general per approach") {
  for (long long d : {3, 7, 64, 4096}) {
    const auto rows = table_rows(d);
    for (size_t i = 0; i < rows.size(); i += 3) {
      const double general = rows[i].k;
      const double centered = rows[i + 1].k;
      const double symmetric = rows[i + 2].k;
      CHECK(rows[i].ccase == CenteringCase::general);
      CHECK(symmetric <= centered * (1.0 + 1e-15));
      CHECK(centered <= general * (1.0 + 1e-15));
    }
  }
}

TEST_CASE("every closed-form K is nondecreasing in d") {
  long long prev_d = 3;
  for (long long d : {4, 9, 30, 333, 12345, 2000000}) {
    const auto lo = table_rows(prev_d);
    const auto hi = table_rows(d);
    for (size_t i = 0; i < lo.size(); ++i) {
      CHECK(hi[i].k >= lo[i].k);
    }
    CHECK(k_naive(d, RExponent::infinity()) >=
          k_naive(prev_d, RExponent::infinity()));
    CHECK(k_john(d) >= k_john(prev_d));
    prev_d = d;
  }
}

TEST_CASE("limit ratios and K* table") {
  const LimitRatios l = limit_ratios();
  CHECK(std::abs(l.trbern_over_nem - 2.20205) <= 1e-5);
  CHECK(std::abs(l.type2_over_nem - 1.47152) <= 1e-5);
  CHECK(std::abs(l.trbern_over_type2 - 1.49645) <= 1e-5);
  CHECK(l.nem_kstar[0] == doctest::Approx(8.0 * kE).epsilon(1e-15));
  CHECK(std::abs(l.nem_kstar[1] - 5.4366) <= 1e-4);
  CHECK(l.nem_kstar[2] == l.nem_kstar[1]);
  CHECK(l.type2_kstar == std::array<double, 3>{8.0, 8.0, 2.0});
  CHECK(std::abs(l.trbern_kstar[1] - 11.9716) <= 1e-12);
  CHECK(std::abs(l.trbern_kstar[2] - 8.41) <= 1e-12);
}

TEST_CASE("log-d evaluation path is overflow-safe up to log d = 1e6") {
  const double ld = 1e6;
  const LimitRatios l = limit_ratios();
  const double nem = k_nem_case_log(ld, CenteringCase::centered);
  CHECK(std::isfinite(nem));
  CHECK(std::abs(nem / ld / l.nem_kstar[1] - 1.0) <= 1e-3);
  const double gen = k_nem_case_log(ld, CenteringCase::general);
  CHECK(std::abs(gen / ld / l.nem_kstar[0] - 1.0) <= 1e-3);
  for (bool refined : {false, true}) {
    const double t2 = k_type2_linf_log(ld, CenteringCase::centered, refined);
    CHECK(std::isfinite(t2));
    CHECK(std::abs(t2 / ld / l.type2_kstar[1] - 1.0) <= 1e-3);
    const double t2s = k_type2_linf_log(ld, CenteringCase::symmetric, refined);
    CHECK(std::abs(t2s / ld / l.type2_kstar[2] - 1.0) <= 1e-3);
  }
  const double tb = k_trbern_log(ld, CenteringCase::centered);
  CHECK(std::abs(tb / ld / l.trbern_kstar[1] - 1.0) <= 1e-3);
  const double tbs = k_trbern_log(ld, CenteringCase::symmetric);
  CHECK(std::abs(tbs / ld / l.trbern_kstar[2] - 1.0) <= 1e-3);
  // The optimized constant also evaluates straight from log d.
  const KNem kn = k_nem_log(ld, RExponent::infinity());
  CHECK(std::isfinite(kn.k));
  CHECK(std::abs(kn.k / ld / l.nem_kstar[1] - 1.0) <= 1e-3);
  CHECK(std::isfinite(h2_log(ld)));
}

TEST_CASE("named scale constants") {
  CHECK(h2_scale_constant() ==
        doctest::Approx(4.0 * kPinelisKMax / std::sqrt(2.0 * M_PI))
            .epsilon(1e-15));
  CHECK(cd_scale_constant() ==
        doctest::Approx(std::sqrt(2.0 / M_PI)).epsilon(1e-15));
}
