// nemi — constants and numerical checks for Nemirovski-type inequalities
// E||S_n - E S_n||^2 <= K(d, r) sum_i E||X_i||^2 on l_r^d.
//
// Exit codes: 0 all checks pass, 1 usage error, 2 an inequality violated
// beyond tolerance.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nemineq/report.hpp"
#include "nemineq/version.hpp"

namespace {

using namespace nemineq;

RExponent parse_r(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") {
    return RExponent::infinity();
  }
  size_t pos = 0;
  const double v = std::stod(text, &pos);
  if (pos != text.size()) {
    throw std::domain_error("could not parse --r value: " + text);
  }
  return RExponent(v);
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("NEMI_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 42;
}

int write_output(const ReportDocument& doc, const std::string& format,
                 const std::string& out_path) {
  std::string text;
  if (format == "csv") {
    text = emit_csv(doc);
  } else if (format == "json") {
    text = emit_json(doc);
  } else {
    text = emit_table(doc);
  }
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 1;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nemi: explicit constants K(d, r) for Nemirovski-type inequalities "
      "and desk-scale numerical verification"};
  app.set_version_flag("--version", std::string("nemi ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();  // let --format/--out apply after a subcommand name

  std::string format = "table";
  std::string out_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "table"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to this path");

  long long d = 8;
  long long n = 1;
  long long reps = 10000;
  std::uint64_t seed = default_seed();
  std::string r_text = "inf";
  std::string case_text = "centered";
  std::string dist_text = "uniform_hypercube";
  double p = 0.75;
  double delta = 0.1;

  auto* c_constants = app.add_subcommand(
      "constants", "All K(d, inf) constants by approach and case");
  c_constants->add_option("--d", d, "Dimension (>= 3)")->required();

  auto* c_limits =
      app.add_subcommand("limits", "Large-d limits K* and ratio limits");

  long long d_min = 8, d_max = 10000000;
  int points = 60;
  auto* c_curve = app.add_subcommand(
      "curve", "K(d, inf) columns on a log-spaced dimension grid");
  c_curve->add_option("--d-min", d_min, "Smallest dimension (>= 3)")
      ->capture_default_str();
  c_curve->add_option("--d-max", d_max, "Largest dimension")
      ->capture_default_str();
  c_curve->add_option("--points", points, "Grid size (>= 2)")
      ->capture_default_str();
  c_curve->add_option("--case", case_text, "general|centered|symmetric")
      ->capture_default_str();

  auto* c_verify = app.add_subcommand(
      "verify", "Sampled (and exact, within budget) ratio vs every bound");
  c_verify->add_option("--dist", dist_text,
                       "rademacher_basis|uniform_hypercube|asym_bernoulli")
      ->capture_default_str();
  c_verify->add_option("--case", case_text, "general|centered|symmetric")
      ->capture_default_str();
  c_verify->add_option("--d", d, "Dimension")->required();
  c_verify->add_option("--n", n, "Number of summands")->required();
  c_verify->add_option("--reps", reps, "Monte-Carlo replicates")
      ->capture_default_str();
  c_verify->add_option("--seed", seed, "RNG seed (default: NEMI_SEED or 42)");
  c_verify->add_option("--r", r_text, "Norm exponent in [1, inf], or 'inf'")
      ->capture_default_str();
  c_verify->add_option("--p", p, "Success probability for asym_bernoulli")
      ->capture_default_str();

  int lemma_dim = 16;
  long long trials = 10000;
  std::string lemma_r_text = "4";
  auto* c_lemma = app.add_subcommand(
      "lemma", "Randomized smoothness checks for V(f) = ||f||_r^2");
  c_lemma->add_option("--r", lemma_r_text, "Norm exponent, finite and >= 2")
      ->capture_default_str();
  c_lemma->add_option("--dim", lemma_dim, "Largest dimension")
      ->capture_default_str();
  c_lemma->add_option("--trials", trials, "Number of random trials")
      ->capture_default_str();
  c_lemma->add_option("--seed", seed, "RNG seed (default: NEMI_SEED or 42)");

  double z_min = 0.0, z_max = 8.0, step = 0.01;
  auto* c_tails = app.add_subcommand(
      "tails", "Gaussian tail bounds on the grid (z_min, z_max]");
  c_tails->add_option("--z-min", z_min, "Grid start (exclusive)")
      ->capture_default_str();
  c_tails->add_option("--z-max", z_max, "Grid end (inclusive)")
      ->capture_default_str();
  c_tails->add_option("--step", step, "Grid step")->capture_default_str();

  auto* c_cd = app.add_subcommand(
      "cd", "c_d^2 = E max_j Z_j^2 by quadrature with all attached bounds");
  c_cd->add_option("--d", d, "Dimension (>= 1)")->required();
  c_cd->add_option("--delta", delta, "delta in the parametric lower bound")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_constants->parsed()) {
      return write_output(run_constants(d), format, out_path);
    }
    if (c_limits->parsed()) {
      return write_output(run_limits(), format, out_path);
    }
    if (c_curve->parsed()) {
      const CenteringCase c = centering_case_from_string(case_text);
      return write_output(run_curve(d_min, d_max, points, c), format, out_path);
    }
    if (c_verify->parsed()) {
      if (reps < 1) throw std::domain_error("verify: requires --reps >= 1");
      DistributionSpec dist = DistributionSpec::uniform_hypercube();
      if (dist_text == "rademacher_basis") {
        dist = DistributionSpec::rademacher_basis();
      } else if (dist_text == "uniform_hypercube") {
        dist = DistributionSpec::uniform_hypercube();
      } else if (dist_text == "asym_bernoulli") {
        dist = DistributionSpec::asym_bernoulli(p);
      } else {
        throw std::domain_error("unknown --dist: " + dist_text);
      }
      MCConfig cfg{d, n, reps, seed};
      const CommandResult res = run_verify(
          dist, centering_case_from_string(case_text), cfg, parse_r(r_text));
      const int io = write_output(res.doc, format, out_path);
      if (io != 0) return io;
      return res.pass ? 0 : 2;
    }
    if (c_lemma->parsed()) {
      const CommandResult res =
          run_lemma(parse_r(lemma_r_text), lemma_dim, trials, seed);
      const int io = write_output(res.doc, format, out_path);
      if (io != 0) return io;
      return res.pass ? 0 : 2;
    }
    if (c_tails->parsed()) {
      const CommandResult res = run_tails(z_min, z_max, step);
      const int io = write_output(res.doc, format, out_path);
      if (io != 0) return io;
      return res.pass ? 0 : 2;
    }
    if (c_cd->parsed()) {
      const CommandResult res = run_cd(d, delta);
      const int io = write_output(res.doc, format, out_path);
      if (io != 0) return io;
      return res.pass ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
