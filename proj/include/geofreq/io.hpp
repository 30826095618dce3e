#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "geofreq/experiments.hpp"

namespace geofreq {

inline const char* csv_header() {
  return "g,n,lambda,ratio_exact,ratio_exact_log2,prediction_log2,normalized_ratio,f_lambda,epsilon";
}

/// One CSV data row. Rationals are canonical "p/q", reals are shortest
/// decimals with precision_digits significant digits; never locale-dependent.
inline std::string csv_row(const SweepRecord& rec) {
  int d = rec.precision_digits;
  std::string row;
  row += std::to_string(rec.g);
  row += ',';
  row += std::to_string(rec.n);
  row += ',';
  row += rec.lambda_actual.to_string();
  row += ',';
  row += rec.ratio.to_string();
  row += ',';
  row += rec.ratio_exact_log2.to_string(d);
  row += ',';
  row += rec.prediction_log2.to_string(d);
  row += ',';
  row += rec.normalized_ratio.to_string(d);
  row += ',';
  row += rec.f_value.to_string(d);
  row += ',';
  row += rec.epsilon.to_string(d);
  return row;
}

inline void write_sweep_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
  out << csv_header() << '\n';
  for (const SweepRecord& rec : records) out << csv_row(rec) << '\n';
}

/// All numeric values are serialized as strings: 30-digit values do not
/// survive 64-bit-float JSON readers.
inline nlohmann::ordered_json record_to_json(const SweepRecord& rec) {
  int d = rec.precision_digits;
  nlohmann::ordered_json j;
  j["g"] = std::to_string(rec.g);
  j["n"] = std::to_string(rec.n);
  j["lambda"] = rec.lambda_actual.to_string();
  j["lambda_requested"] = rec.lambda_requested.to_string();
  j["ratio_exact"] = rec.ratio.to_string();
  j["ratio_exact_log2"] = rec.ratio_exact_log2.to_string(d);
  j["prediction_log2"] = rec.prediction_log2.to_string(d);
  j["normalized_ratio"] = rec.normalized_ratio.to_string(d);
  j["f_lambda"] = rec.f_value.to_string(d);
  j["epsilon"] = rec.epsilon.to_string(d);
  return j;
}

inline nlohmann::ordered_json report_to_json(const ConvergenceReport& report) {
  nlohmann::ordered_json j;
  j["series"] = nlohmann::ordered_json::array();
  for (const ConvergenceSeries& s : report.series) {
    nlohmann::ordered_json js;
    js["lambda"] = s.lambda.to_string();
    js["analyzable"] = s.analyzable;
    js["abs_epsilon"] = nlohmann::ordered_json::array();
    for (const auto& [g, e] : s.abs_epsilon) {
      nlohmann::ordered_json point;
      point["g"] = std::to_string(g);
      point["value"] = std::to_string(e);
      js["abs_epsilon"].push_back(point);
    }
    js["strictly_decreasing"] = s.strictly_decreasing;
    js["nonstrict_steps"] = s.nonstrict_steps;
    if (s.decay_defined) js["decay_ratio"] = std::to_string(s.decay_ratio);
    j["series"].push_back(js);
  }
  j["uniformity_gap"] = std::to_string(report.uniformity_gap);
  return j;
}

/// Full sweep payload: records plus the convergence analysis footer.
inline std::string sweep_to_json(const std::vector<SweepRecord>& records,
                                 const ConvergenceReport& report, int digits) {
  nlohmann::ordered_json j;
  j["precision_digits"] = std::to_string(digits);
  j["records"] = nlohmann::ordered_json::array();
  for (const SweepRecord& rec : records) j["records"].push_back(record_to_json(rec));
  j["analysis"] = report_to_json(report);
  return j.dump(2) + "\n";
}

}  // namespace geofreq
