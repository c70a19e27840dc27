#include "nemineq/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nemineq/gauss.hpp"
#include "nemineq/norms.hpp"
#include "nemineq/rng.hpp"
#include "nemineq/version.hpp"

namespace nemineq {

namespace {

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ReportDocument make_doc(std::string kind, std::vector<std::string> columns,
                        std::uint64_t seed = 0) {
  ReportDocument doc;
  doc.kind = std::move(kind);
  doc.columns = std::move(columns);
  doc.version = kVersion;
  doc.seed = seed;
  doc.timestamp = utc_now();
  return doc;
}

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return "";
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  return std::get<std::string>(c);
}

nlohmann::json cell_json(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return nullptr;
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  if (const auto* d = std::get_if<double>(&c)) return *d;
  return std::get<std::string>(c);
}

Cell opt_cell(const std::optional<double>& v) {
  if (v) return Cell{*v};
  return Cell{std::monostate{}};
}

std::string ok_text(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string emit_csv(const ReportDocument& doc) {
  std::ostringstream out;
  for (size_t j = 0; j < doc.columns.size(); ++j) {
    if (j) out << ',';
    out << doc.columns[j];
  }
  out << '\n';
  for (const auto& row : doc.rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << cell_text(row[j]);
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_json(const ReportDocument& doc) {
  nlohmann::json j;
  j["kind"] = doc.kind;
  j["metadata"] = {{"version", doc.version},
                   {"seed", doc.seed},
                   {"timestamp", doc.timestamp}};
  j["columns"] = doc.columns;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : doc.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string emit_table(const ReportDocument& doc) {
  std::vector<size_t> width(doc.columns.size());
  for (size_t j = 0; j < doc.columns.size(); ++j) {
    width[j] = doc.columns[j].size();
  }
  std::vector<std::vector<std::string>> text;
  for (const auto& row : doc.rows) {
    std::vector<std::string> line;
    for (size_t j = 0; j < row.size(); ++j) {
      line.push_back(cell_text(row[j]));
      width[j] = std::max(width[j], line.back().size());
    }
    text.push_back(std::move(line));
  }
  std::ostringstream out;
  out << "# " << doc.kind << " (v" << doc.version << ")\n";
  auto pad = [&out, &width](const std::string& s, size_t j, size_t n) {
    out << s;
    if (j + 1 < n) out << std::string(width[j] - s.size() + 2, ' ');
  };
  for (size_t j = 0; j < doc.columns.size(); ++j) {
    pad(doc.columns[j], j, doc.columns.size());
  }
  out << '\n';
  for (const auto& line : text) {
    for (size_t j = 0; j < line.size(); ++j) pad(line[j], j, line.size());
    out << '\n';
  }
  return out.str();
}

ReportDocument run_constants(long long d) {
  ReportDocument doc = make_doc("constants_table", {"approach", "case", "d", "k"});
  for (const ConstantRow& row : table_rows(d)) {
    doc.rows.push_back({Cell{to_string(row.approach)}, Cell{to_string(row.ccase)},
                        Cell{row.d}, Cell{row.k}});
  }
  return doc;
}

ReportDocument run_limits() {
  ReportDocument doc = make_doc("limits_table", {"quantity", "value"});
  const LimitRatios l = limit_ratios();
  auto add = [&doc](const std::string& name, double v) {
    doc.rows.push_back({Cell{name}, Cell{v}});
  };
  add("lim_trbern_over_nem", l.trbern_over_nem);
  add("lim_type2_over_nem", l.type2_over_nem);
  add("lim_trbern_over_type2", l.trbern_over_type2);
  static constexpr const char* kCaseNames[] = {"general", "centered",
                                               "symmetric"};
  for (int i = 0; i < 3; ++i) {
    add(std::string("kstar_nemirovski_") + kCaseNames[i], l.nem_kstar[i]);
  }
  for (int i = 0; i < 3; ++i) {
    add(std::string("kstar_type2_") + kCaseNames[i], l.type2_kstar[i]);
  }
  for (int i = 0; i < 3; ++i) {
    add(std::string("kstar_trbern_") + kCaseNames[i], l.trbern_kstar[i]);
  }
  return doc;
}

ReportDocument run_curve(long long d_min, long long d_max, int points,
                         CenteringCase ccase) {
  if (d_min < 3 || d_min >= d_max || points < 2) {
    throw std::domain_error("curve: requires 3 <= d_min < d_max, points >= 2");
  }
  ReportDocument doc = make_doc(
      "curve", {"d", "k_nem", "k_type2", "k_type2_refined", "k_trbern"});
  const double la = std::log(static_cast<double>(d_min));
  const double lb = std::log(static_cast<double>(d_max));
  long long prev = -1;
  for (int i = 0; i < points; ++i) {
    const double f = points == 1 ? 0.0
                                 : static_cast<double>(i) / (points - 1);
    auto d = static_cast<long long>(
        std::llround(std::exp(la + f * (lb - la))));
    d = std::clamp(d, d_min, d_max);
    if (d == prev) continue;
    prev = d;
    doc.rows.push_back({Cell{d}, Cell{k_nem_case(d, ccase)},
                        Cell{k_type2_linf(d, ccase, false)},
                        Cell{k_type2_linf(d, ccase, true)},
                        Cell{k_trbern(d, ccase)}});
  }
  return doc;
}

namespace {

struct BoundEntry {
  std::string name;
  double k;
};

/// Constants applicable to (d, case, r). Approaches that control only the
/// centered sum pick up the centering factor 4 in the general case;
/// the type-2 and truncation/Bernstein routes do not.
std::vector<BoundEntry> applicable_bounds(long long d, CenteringCase ccase,
                                          const RExponent& r) {
  const double gen = ccase == CenteringCase::general ? 4.0 : 1.0;
  std::vector<BoundEntry> out;
  out.push_back({"k_naive", gen * k_naive(d, r)});
  out.push_back({"k_john", gen * k_john(d)});
  if (r.is_infinite()) {
    out.push_back({"k_nem", gen * k_nem(d, r).k});
    out.push_back({"k_type2", k_type2_linf(d, ccase, false)});
    out.push_back({"k_type2_refined", k_type2_linf(d, ccase, true)});
    out.push_back({"k_trbern", k_trbern(d, ccase)});
  } else if (r.value() >= 2.0) {
    out.push_back({"k_nem", gen * k_nem(d, r).k});
    const double t2 = k_type2_lr(r.value());
    out.push_back(
        {"k_type2_lr", ccase == CenteringCase::symmetric ? t2 / 4.0 : t2});
  }
  return out;
}

}  // namespace

CommandResult run_verify(const DistributionSpec& dist, CenteringCase ccase,
                         const MCConfig& cfg, const RExponent& r) {
  CommandResult res;
  res.doc = make_doc("verify_report", {"quantity", "value", "ok"}, cfg.seed);

  const RatioEstimate mc = estimate_ratio(dist, ccase, cfg, r);
  std::optional<RatioEstimate> exact;
  const long long bits =
      dist.kind == DistributionSpec::Kind::uniform_hypercube ||
              dist.kind == DistributionSpec::Kind::asym_bernoulli
          ? cfg.n * cfg.d
          : cfg.n;
  if (bits <= 22) {
    exact = exact_ratio(dist, ccase, cfg.d, cfg.n, r);
  }

  auto add = [&res](const std::string& name, Cell value,
                    std::optional<bool> ok = std::nullopt) {
    res.doc.rows.push_back(
        {Cell{name}, std::move(value),
         ok ? Cell{ok_text(*ok)} : Cell{std::monostate{}}});
  };
  add("ratio_mc", Cell{mc.ratio});
  add("stderr_mc", Cell{mc.std_error});
  add("numerator_mc", Cell{mc.numerator});
  add("denominator", Cell{mc.denominator});
  add("ratio_exact", exact ? Cell{exact->ratio} : Cell{std::monostate{}});

  bool pass = true;
  for (const BoundEntry& b : applicable_bounds(cfg.d, ccase, r)) {
    // Monte-Carlo ratios get 4 standard errors of slack; exact ratios none.
    bool ok = mc.ratio <= b.k + 4.0 * mc.std_error + 1e-12;
    if (exact) ok = ok && exact->ratio <= b.k + 1e-12;
    pass = pass && ok;
    add(b.name, Cell{b.k}, ok);
  }
  res.pass = pass;
  return res;
}

CommandResult run_lemma(const RExponent& r, int max_dim, long long trials,
                        std::uint64_t seed) {
  require_smooth_exponent(r, "lemma");
  if (max_dim < 1 || trials < 1) {
    throw std::domain_error("lemma: requires dim >= 1 and trials >= 1");
  }
  const double rv = r.value();

  double min_lower = 0.0, min_upper = 0.0;
  double max_grad_err = 0.0;
  double max_upper_rel_r2 = 0.0;
  for (long long t = 0; t < trials; ++t) {
    SplitRng rng(seed, static_cast<std::uint64_t>(t));
    const auto d = static_cast<Eigen::Index>(1 + rng.next_u64() % max_dim);
    Eigen::VectorXd f(d), g(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      f(j) = 2.0 * rng.next_unit() - 1.0;
      g(j) = 2.0 * rng.next_unit() - 1.0;
    }
    const double scale = 1.0 + norm_sq(f, r) + norm_sq(g, r);
    const SandwichSlack s = sandwich_slack(f, g, r);
    min_lower = std::min(min_lower, s.lower / scale);
    min_upper = std::min(min_upper, s.upper / scale);
    if (rv == 2.0) {
      max_upper_rel_r2 = std::max(max_upper_rel_r2, std::abs(s.upper) / scale);
    }

    const double dv = directional_derivative(f, g, r);
    const double h = 1e-6 * (r_norm(f, r) + r_norm(g, r));
    if (h > 0.0) {
      const double fd = (norm_sq((f + h * g).eval(), r) -
                         norm_sq((f - h * g).eval(), r)) /
                        (2.0 * h);
      const double rel =
          std::abs(dv - fd) / std::max({std::abs(dv), std::abs(fd), 1e-8});
      max_grad_err = std::max(max_grad_err, rel);
    }
  }

  // Sharpness at t = 1e-4 on balanced sign patterns.
  double max_sharp_gap = 0.0;
  for (Eigen::Index d : {2, 4, 8, 16}) {
    if (d > std::max(2, max_dim)) continue;
    Eigen::VectorXd f = Eigen::VectorXd::Ones(d);
    Eigen::VectorXd g(d);
    for (Eigen::Index j = 0; j < d; ++j) g(j) = j < d / 2 ? 1.0 : -1.0;
    const double ratio = sharpness_ratio(f, g, 1e-4, r);
    max_sharp_gap = std::max(max_sharp_gap, std::abs(ratio - (rv - 1.0)));
  }

  CommandResult res;
  res.doc = make_doc("lemma_report", {"quantity", "value", "ok"}, seed);
  auto add = [&res](const std::string& name, double v, bool ok) {
    res.doc.rows.push_back({Cell{name}, Cell{v}, Cell{ok_text(ok)}});
    return ok;
  };
  bool pass = true;
  pass &= add("min_lower_slack_scaled", min_lower, min_lower >= -1e-9);
  pass &= add("min_upper_slack_scaled", min_upper, min_upper >= -1e-9);
  pass &= add("max_grad_rel_err", max_grad_err, max_grad_err <= 1e-5);
  pass &= add("max_sharpness_gap_t1e-4", max_sharp_gap, max_sharp_gap <= 1e-2);
  if (rv == 2.0) {
    pass &= add("max_upper_slack_rel_r2", max_upper_rel_r2,
                max_upper_rel_r2 <= 1e-12);
  }
  res.pass = pass;
  return res;
}

CommandResult run_tails(double z_min, double z_max, double step) {
  if (!(step > 0.0) || !(z_min < z_max)) {
    throw std::domain_error("tails: requires z_min < z_max and step > 0");
  }
  CommandResult res;
  res.doc = make_doc("tails_table", {"z", "survival", "komatsu", "qi", "mills"});
  bool pass = true;
  for (long long k = 1;; ++k) {
    const double z = z_min + static_cast<double>(k) * step;
    if (z > z_max + 1e-9 * step) break;
    const TailBoundSet t = tail_bounds(z);
    res.doc.rows.push_back({Cell{z}, Cell{t.survival}, Cell{t.komatsu_lower},
                            Cell{t.qi_upper}, opt_cell(t.mills)});
    bool ok = t.komatsu_lower <= t.survival && t.survival <= t.qi_upper;
    if (t.mills) ok = ok && t.qi_upper <= *t.mills;
    pass = pass && ok;
  }
  if (res.doc.rows.empty()) {
    throw std::domain_error("tails: empty grid");
  }
  res.pass = pass;
  return res;
}

CommandResult run_cd(long long d, double delta) {
  const CdBounds b = cd_bounds(d, delta);
  const CdLowerBest best = cd_lower_best(d, delta);
  constexpr double kSlack = 1e-8;  // quadrature tolerance headroom

  CommandResult res;
  res.doc = make_doc("cd_report", {"quantity", "value", "ok"});
  auto add = [&res](const std::string& name, Cell v, Cell ok) {
    res.doc.rows.push_back({Cell{name}, std::move(v), std::move(ok)});
  };
  add("d", Cell{d}, Cell{std::monostate{}});
  add("exact_sq", Cell{b.exact_sq}, Cell{std::monostate{}});
  const bool lower_ok = b.lower_sq <= b.exact_sq + kSlack;
  add("lower_sq", Cell{b.lower_sq}, Cell{ok_text(lower_ok)});
  add("lower_t_o", Cell{best.t_o}, Cell{std::monostate{}});
  bool pass = lower_ok;
  auto add_upper = [&](const std::string& name,
                       const std::optional<double>& u) {
    if (!u) {
      add(name, Cell{std::monostate{}}, Cell{std::string("absent")});
      return;
    }
    const bool ok = b.exact_sq <= *u + kSlack;
    pass = pass && ok;
    add(name, Cell{*u}, Cell{ok_text(ok)});
  };
  add_upper("upper_simple_sq", b.upper_simple_sq);
  add_upper("upper_corrected_sq", b.upper_corrected_sq);
  add_upper("upper_h3_sq", b.upper_h3_sq);
  res.pass = pass;
  return res;
}

}  // namespace nemineq
