#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <string>

#include <json.hpp>

#include "geofreq/experiments.hpp"
#include "geofreq/io.hpp"

using geofreq::csv_header;
using geofreq::csv_row;
using geofreq::epsilon_of;
using geofreq::Rational;
using geofreq::run_sweep;
using geofreq::SweepSpec;

TEST_CASE("csv header is pinned") {
  CHECK(std::string(csv_header()) ==
        "g,n,lambda,ratio_exact,ratio_exact_log2,prediction_log2,normalized_ratio,f_lambda,epsilon");
}

TEST_CASE("csv row shape and exact fields") {
  auto rec = epsilon_of(2, 0, 30);
  std::string row = csv_row(rec);
  CHECK(row.rfind("2,0,0,1/32,-5,", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == 8);

  auto rec21 = epsilon_of(2, 1, 30);
  std::string row21 = csv_row(rec21);
  CHECK(row21.rfind("2,1,1/2,1/36,", 0) == 0);
}

TEST_CASE("csv output is newline-terminated and deterministic") {
  SweepSpec spec;
  spec.g_values = {2, 4};
  spec.lambda_values = {Rational(0), Rational(1, 2)};
  auto records = run_sweep(spec);

  std::ostringstream a, b;
  geofreq::write_sweep_csv(records, a);
  geofreq::write_sweep_csv(run_sweep(spec), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().back() == '\n');
  CHECK(a.str().find(csv_header()) == 0);
}

TEST_CASE("json payload round-trips every rational exactly") {
  SweepSpec spec;
  spec.g_values = {2, 4};
  spec.lambda_values = {Rational(0), Rational(1, 2)};
  auto records = run_sweep(spec);
  auto report = geofreq::analyze_convergence(records);
  std::string payload = geofreq::sweep_to_json(records, report, spec.precision_digits);

  nlohmann::json j = nlohmann::json::parse(payload);
  REQUIRE(j.contains("records"));
  REQUIRE(j.contains("analysis"));
  REQUIRE(j["records"].size() == records.size());

  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& jr = j["records"][i];
    CHECK(Rational::from_string(jr["ratio_exact"].get<std::string>()) == records[i].ratio);
    CHECK(Rational::from_string(jr["lambda"].get<std::string>()) == records[i].lambda_actual);
    CHECK(Rational::from_string(jr["lambda_requested"].get<std::string>()) ==
          records[i].lambda_requested);
    // numbers are serialized as strings throughout
    CHECK(jr["epsilon"].is_string());
    CHECK(jr["g"].is_string());
  }
  CHECK(j["analysis"]["series"].size() == 2);
}

TEST_CASE("real formatting carries the requested significant digits") {
  geofreq::Real third = geofreq::Real(1, geofreq::bits_for_digits(40)) /
                        geofreq::Real(3, geofreq::bits_for_digits(40));
  std::string s30 = third.to_string(30);
  CHECK(s30.substr(0, 10) == "0.33333333");
  // 30 significant digits: "0." plus 30 threes
  CHECK(s30.size() == 32);

  geofreq::Real one(1, 64);
  CHECK(one.to_string(30) == "1");
}

TEST_CASE("rational strings round-trip") {
  for (const char* s : {"1/32", "-5/7", "0", "4", "123456789123456789/987654321"}) {
    Rational r = Rational::from_string(s);
    CHECK(Rational::from_string(r.to_string()) == r);
  }
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
}
