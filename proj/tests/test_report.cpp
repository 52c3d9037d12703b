#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "ftc/report.hpp"

using namespace ftc;

namespace {

EstimateReport sample_report(uint64_t seed) {
  EstimateReport r;
  r.gadget = "cz_single";
  r.level = 1;
  r.p_e = 1e-3;
  r.trial_count = 10000;
  r.accept_count = 9818;
  r.logical_error_count = 1;
  r.frame_error_count = 37;
  r.p_hat = 0.9818;
  r.ci_low = 0.97904;
  r.ci_high = 0.98412;
  r.conditional_logical_error = 1.0 / 9818.0;
  r.cond_err_lo = 0.0;
  r.cond_err_hi = 5.7e-4;
  r.frame_error_rate = 37.0 / 9818.0;
  r.seed = seed;
  return r;
}

}  // namespace

TEST_CASE("format_double is shortest-exact") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-3) == "0.001");
  // Round trip: the printed form parses back to the identical bits.
  for (double v : {1.0 / 3.0, 0.00894770593852893, 17.0 / 15.0, 1e-300, 6.02e23}) {
    const double back = std::stod(format_double(v));
    CHECK(back == v);
  }
}

TEST_CASE("estimate CSV round-trips byte for byte") {
  const std::vector<EstimateReport> reports{sample_report(7), sample_report(8)};
  const std::string csv = estimate_csv(reports);
  const auto parsed = parse_estimate_csv(csv);
  REQUIRE(parsed.size() == 2);
  CHECK(estimate_csv(parsed) == csv);
  CHECK(parsed[0].gadget == "cz_single");
  CHECK(parsed[0].accept_count == 9818);
  CHECK(parsed[0].p_hat == reports[0].p_hat);
  CHECK(parsed[1].seed == 8);
}

TEST_CASE("estimate CSV parse errors name the line") {
  const std::string csv = estimate_csv({sample_report(1)});
  CHECK_THROWS_WITH_AS(parse_estimate_csv(csv + "this,is,short\n"),
                       doctest::Contains("line 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_estimate_csv("not,a,header\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_estimate_csv(""), std::invalid_argument);
}

TEST_CASE("estimate JSON carries the same figures") {
  const std::string json = estimate_json({sample_report(7)});
  CHECK(json.find("\"gadget\"") != std::string::npos);
  CHECK(json.find("cz_single") != std::string::npos);
  CHECK(json.find(format_double(0.9818)) != std::string::npos);
  CHECK(json.find("\"seed\"") != std::string::npos);
}

TEST_CASE("resource CSV and JSON emit every column") {
  CurveRow row;
  row.p_e = 1e-3;
  row.log10_N = 20.0;
  row.l_bar = 3;
  row.r0 = Rational(6156);
  row.rh = Rational(2623);
  row.rplus = Rational(5303);
  row.rs = Rational(159);
  row.rd = Rational(615);
  const std::string csv = resource_csv({row});
  CHECK(csv.find("6156") != std::string::npos);
  CHECK(csv.find("2623") != std::string::npos);
  CHECK(csv.find("5303") != std::string::npos);
  const std::string json = resource_json({row});
  CHECK(json.find("6156") != std::string::npos);
  CHECK(json.find("\"l_bar\"") != std::string::npos);
}

TEST_CASE("overlay CSV parsing") {
  // N uses the same explicit 1e<log10> notation as the CLI flags.
  const auto pts = parse_overlay_csv("N,R\n1e10,120\n1e20,3.5e4\n");
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].log10_N == 10.0);
  CHECK(pts[0].r == 120.0);
  CHECK(pts[1].r == 3.5e4);
  CHECK_THROWS_WITH_AS(parse_overlay_csv("N,R\n1e10\n"), doctest::Contains("line 2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_overlay_csv("wrong,header\n1e1,2\n"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_overlay_csv("N,R\n1e10,120\nx,y\n"),
                       doctest::Contains("line 3"), std::invalid_argument);
}

TEST_CASE("resource CSV with overlay appends a source column") {
  CurveRow row;
  row.p_e = 1e-3;
  row.log10_N = 10.0;
  row.l_bar = 2;
  row.r0 = Rational(6156);
  row.rh = Rational(2623);
  row.rplus = Rational(5303);
  row.rs = Rational(159);
  row.rd = Rational(615);
  const std::string out =
      resource_csv_with_overlay({row}, {{10.0, 120.0}, {20.0, 3.5e4}});
  CHECK(out.find("overlay") != std::string::npos);
  CHECK(out.find("120") != std::string::npos);
  CHECK(out.find("6156") != std::string::npos);
}
