#ifndef NEMINEQ_REPORT_HPP
#define NEMINEQ_REPORT_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "nemineq/constants.hpp"
#include "nemineq/simulate.hpp"

namespace nemineq {

/// One table cell; monostate marks an absent value (empty in CSV, null in
/// JSON).
using Cell = std::variant<std::monostate, long long, double, std::string>;

struct ReportDocument {
  std::string kind;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::string version;
  std::uint64_t seed = 0;
  std::string timestamp;  // UTC, attached to JSON output only
};

/// Floating output uses 12 significant digits, '.' decimal separator and LF
/// line endings, so fixed flags reproduce files byte for byte.
std::string format_number(double v);

std::string emit_csv(const ReportDocument& doc);
std::string emit_json(const ReportDocument& doc);
std::string emit_table(const ReportDocument& doc);

struct CommandResult {
  ReportDocument doc;
  bool pass = true;
};

/// `constants`: the 4 x 3 table of K(d, inf) values.
ReportDocument run_constants(long long d);

/// `limits`: the three large-d ratio limits and the nine K* values.
ReportDocument run_limits();

/// `curve`: K(d, inf) columns on a log-spaced integer grid of dimensions.
ReportDocument run_curve(long long d_min, long long d_max, int points,
                         CenteringCase ccase);

/// `verify`: Monte-Carlo (and, within budget, exact) ratio against every
/// applicable constant; pass means ratio <= K within 4 standard errors.
CommandResult run_verify(const DistributionSpec& dist, CenteringCase ccase,
                         const MCConfig& cfg, const RExponent& r);

/// `lemma`: randomized smoothness checks (sandwich slacks, gradient vs
/// central differences, sharpness ratio at t = 1e-4).
CommandResult run_lemma(const RExponent& r, int max_dim, long long trials,
                        std::uint64_t seed);

/// `tails`: survival vs Komatsu/Qi/Mills on the half-open grid
/// (z_min, z_max] with the given step; pass means no ordering violation.
CommandResult run_tails(double z_min, double z_max, double step);

/// `cd`: c_d^2 with every attached bound; pass means the orderings hold.
CommandResult run_cd(long long d, double delta);

}  // namespace nemineq

#endif  // NEMINEQ_REPORT_HPP
