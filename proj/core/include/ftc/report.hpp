#pragma once

#include <string>
#include <vector>

#include "ftc/montecarlo.hpp"
#include "ftc/resources.hpp"

namespace ftc {

/// CSV and JSON emission with byte-stable round-trips: numbers are printed
/// with shortest-exact formatting, so parse(emit(x)) re-emits identically.

std::string format_double(double v);

std::string estimate_csv(const std::vector<EstimateReport>& reports);
std::vector<EstimateReport> parse_estimate_csv(const std::string& text);
std::string estimate_json(const std::vector<EstimateReport>& reports);

std::string resource_csv(const std::vector<CurveRow>& rows);
std::string resource_json(const std::vector<CurveRow>& rows);

/// User-supplied comparison curve: CSV with header "N,R" and rows of
/// log10(N) and resource count. Parse errors name the offending line.
struct OverlayPoint {
  double log10_N = 0.0;
  double r = 0.0;
};
std::vector<OverlayPoint> parse_overlay_csv(const std::string& text);

/// Resource CSV with overlay rows appended under a source column.
std::string resource_csv_with_overlay(const std::vector<CurveRow>& rows,
                                      const std::vector<OverlayPoint>& overlay);

}  // namespace ftc
