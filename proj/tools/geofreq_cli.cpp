// Command-line front end: exact frequency ratios, (g, lambda) sweeps with
// CSV/JSON output, and the lemma/identity/convergence verification suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geofreq/geofreq.hpp"

namespace {

using geofreq::Rational;

// Grid syntax: "a" | "a:b" (step +1) | "a:b:+k" (arithmetic) | "a:b:xk" (geometric).
std::vector<long> parse_g_range(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty() || parts.size() > 3)
    throw CLI::ValidationError("--g", "expected a, a:b, a:b:+k or a:b:xk, got '" + text + "'");

  long a = std::stol(parts[0]);
  long b = parts.size() >= 2 ? std::stol(parts[1]) : a;
  if (a < 2 || b < a)
    throw CLI::ValidationError("--g", "need 2 <= a <= b in '" + text + "'");

  std::vector<long> out;
  if (parts.size() == 3 && parts[2].size() >= 2 && parts[2][0] == 'x') {
    long k = std::stol(parts[2].substr(1));
    if (k < 2) throw CLI::ValidationError("--g", "geometric ratio must be >= 2");
    for (long g = a; g <= b; g *= k) out.push_back(g);
  } else {
    long step = 1;
    if (parts.size() == 3) {
      if (parts[2].empty() || parts[2][0] != '+')
        throw CLI::ValidationError("--g", "step must be +k or xk in '" + text + "'");
      step = std::stol(parts[2].substr(1));
      if (step < 1) throw CLI::ValidationError("--g", "arithmetic step must be >= 1");
    }
    for (long g = a; g <= b; g += step) out.push_back(g);
  }
  return out;
}

std::vector<Rational> parse_lambda_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational l = Rational::from_string(item);
    if (l.sign() < 0) throw CLI::ValidationError("--lambda", "lambda must be nonnegative: " + item);
    out.push_back(l);
  }
  if (out.empty()) throw CLI::ValidationError("--lambda", "empty lambda list");
  return out;
}

int cmd_ratio(long g, long n, int precision, const std::string& format) {
  if (g < 2) {
    std::cerr << "ratio: the volume formulas carry the hypothesis g >= 2 (got g = " << g << ")\n";
    return 2;
  }
  if (n < 0) {
    std::cerr << "ratio: cusp count must be nonnegative (got n = " << n << ")\n";
    return 2;
  }

  geofreq::SweepRecord rec = geofreq::epsilon_of(g, n, precision);
  bool warn = !geofreq::mirzakhani_factor(geofreq::SurfaceClass(g, n)).hypothesis_met;

  if (format == "json") {
    nlohmann::ordered_json j = geofreq::record_to_json(rec);
    j["hypothesis_warning"] = warn;
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << geofreq::csv_header() << "\n" << geofreq::csv_row(rec) << "\n";
  } else {
    geofreq::LogReal pred =
        geofreq::LogReal::from_log2(1, rec.prediction_log2, precision);
    std::cout << "g = " << g << "  n = " << n << "  lambda = " << rec.lambda_actual.to_string()
              << "\n"
              << "ratio_exact       = " << rec.ratio.to_string() << "\n"
              << "ratio_exact_log2  = " << rec.ratio_exact_log2.to_string(precision) << "\n"
              << "prediction        = " << pred.to_decimal_string() << "\n"
              << "prediction_log2   = " << rec.prediction_log2.to_string(precision) << "\n"
              << "normalized_ratio  = " << rec.normalized_ratio.to_string(precision) << "\n"
              << "f_lambda          = " << rec.f_value.to_string(precision) << "\n"
              << "epsilon           = " << rec.epsilon.to_string(precision) << "\n";
  }
  if (warn)
    std::cerr << "warning: the frequency normalization hypothesis excludes (g, n) = (2, 0); "
                 "values are computed anyway\n";
  return 0;
}

int cmd_sweep(const std::string& g_range, const std::string& lambda_list, int precision,
              const std::string& out_path, const std::string& format) {
  geofreq::SweepSpec spec;
  spec.g_values = parse_g_range(g_range);
  spec.lambda_values = parse_lambda_list(lambda_list);
  spec.precision_digits = precision;

  std::vector<geofreq::SweepRecord> records = geofreq::run_sweep(spec);

  std::string payload;
  if (format == "json") {
    geofreq::ConvergenceReport report = geofreq::analyze_convergence(records);
    payload = geofreq::sweep_to_json(records, report, precision);
  } else {
    std::ostringstream oss;
    geofreq::write_sweep_csv(records, oss);
    payload = oss.str();
  }

  if (out_path == "-") {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "sweep: cannot open output path '" << out_path << "'\n";
      return 3;
    }
    out << payload;
    if (!out.good()) {
      std::cerr << "sweep: write failed for '" << out_path << "'\n";
      return 3;
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, int precision) {
  std::vector<geofreq::CheckResult> checks;
  auto append = [&checks](std::vector<geofreq::CheckResult> more) {
    for (auto& c : more) checks.push_back(std::move(c));
  };
  if (suite == "lemmas" || suite == "all") append(geofreq::verify_lemmas(precision));
  if (suite == "identities" || suite == "all") append(geofreq::verify_identities(precision));
  if (suite == "convergence" || suite == "all") append(geofreq::verify_convergence(precision));

  int failed = 0;
  const geofreq::CheckResult* first_failure = nullptr;
  for (const geofreq::CheckResult& c : checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    if (!c.pass) {
      ++failed;
      if (!first_failure) first_failure = &c;
    }
  }
  std::cout << "verify: " << checks.size() << " checks, " << (checks.size() - failed)
            << " passed\n";
  if (failed != 0) {
    std::cerr << "verify: first failure: " << first_failure->name << "\n";
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequencies of separating vs nonseparating simple closed geodesics: "
               "exact binomial-sum ratios, asymptotic predictions, and verification sweeps"};
  app.require_subcommand(1);

  long g = 0, n = 0;
  int precision = 30;
  std::string ratio_format = "text";
  std::string sweep_format = "csv";
  std::string g_range = "4:128:x2";
  std::string lambda_list = "0,1/2,1,2,5,10";
  std::string out_path = "-";
  std::string suite = "all";

  auto add_precision = [&precision](CLI::App* cmd) {
    cmd->add_option("--precision", precision, "decimal working precision")
        ->default_val(30)
        ->check(CLI::Range(15, 200))
        ->envname("GEOFREQ_PRECISION");
  };

  CLI::App* ratio = app.add_subcommand("ratio", "exact ratio and prediction for one (g, n)");
  ratio->add_option("--g", g, "genus (>= 2)")->required();
  ratio->add_option("--n", n, "number of cusps (>= 0)")->required();
  add_precision(ratio);
  ratio->add_option("--format", ratio_format, "output format")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  CLI::App* sweep = app.add_subcommand("sweep", "tabulate epsilon(g, n) over a (g, lambda) grid");
  sweep->add_option("--g", g_range, "genus grid: a, a:b, a:b:+k or a:b:xk")
      ->default_val("4:128:x2");
  sweep->add_option("--lambda", lambda_list, "comma-separated exact ratios, e.g. 0,1/2,2")
      ->default_val("0,1/2,1,2,5,10");
  add_precision(sweep);
  sweep->add_option("--out", out_path, "output path, '-' for stdout")->default_val("-");
  sweep->add_option("--format", sweep_format, "output format")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "which suite")
      ->default_val("all")
      ->check(CLI::IsMember({"lemmas", "identities", "convergence", "all"}));
  add_precision(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (ratio->parsed()) return cmd_ratio(g, n, precision, ratio_format);
    if (sweep->parsed()) return cmd_sweep(g_range, lambda_list, precision, out_path, sweep_format);
    if (verify->parsed()) return cmd_verify(suite, precision);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
