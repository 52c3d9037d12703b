#include "ftc/report.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ftc {

namespace {

const char* kEstimateHeader =
    "gadget,level,p_e,trials,accepts,p_hat,ci_low,ci_high,cond_err,cond_err_lo,"
    "cond_err_hi,frame_rate,seed";

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_double(const std::string& s, int lineno) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("csv line " + std::to_string(lineno) + ": bad number '" + s +
                                "'");
  }
}

long parse_long(const std::string& s, int lineno) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("csv line " + std::to_string(lineno) + ": bad integer '" + s +
                                "'");
  }
}

std::string format_n(double log10_N) { return "1e" + format_double(log10_N); }

double parse_n(const std::string& s, int lineno) {
  if (s.rfind("1e", 0) != 0)
    throw std::invalid_argument("csv line " + std::to_string(lineno) +
                                ": N must use the 1e<log10> form");
  return parse_double(s.substr(2), lineno);
}

std::string rational_field(const Rational& r) {
  return format_double(r.convert_to<double>());
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string estimate_csv(const std::vector<EstimateReport>& reports) {
  std::ostringstream out;
  out << kEstimateHeader << '\n';
  for (const auto& r : reports) {
    out << r.gadget << ',' << r.level << ',' << format_double(r.p_e) << ',' << r.trial_count
        << ',' << r.accept_count << ',' << format_double(r.p_hat) << ','
        << format_double(r.ci_low) << ',' << format_double(r.ci_high) << ','
        << format_double(r.conditional_logical_error) << ',' << format_double(r.cond_err_lo)
        << ',' << format_double(r.cond_err_hi) << ',' << format_double(r.frame_error_rate)
        << ',' << r.seed << '\n';
  }
  return out.str();
}

std::vector<EstimateReport> parse_estimate_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::vector<EstimateReport> out;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1) {
      if (line != kEstimateHeader)
        throw std::invalid_argument("csv line 1: unexpected header '" + line + "'");
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 13)
      throw std::invalid_argument("csv line " + std::to_string(lineno) + ": expected 13 fields");
    EstimateReport r;
    r.gadget = f[0];
    r.level = int(parse_long(f[1], lineno));
    r.p_e = parse_double(f[2], lineno);
    r.trial_count = parse_long(f[3], lineno);
    r.accept_count = parse_long(f[4], lineno);
    r.p_hat = parse_double(f[5], lineno);
    r.ci_low = parse_double(f[6], lineno);
    r.ci_high = parse_double(f[7], lineno);
    r.conditional_logical_error = parse_double(f[8], lineno);
    r.cond_err_lo = parse_double(f[9], lineno);
    r.cond_err_hi = parse_double(f[10], lineno);
    r.frame_error_rate = parse_double(f[11], lineno);
    r.seed = uint64_t(std::stoull(f[12]));
    out.push_back(std::move(r));
  }
  if (lineno == 0) throw std::invalid_argument("csv line 1: missing header");
  return out;
}

std::string estimate_json(const std::vector<EstimateReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"gadget", r.gadget},
                   {"level", r.level},
                   {"p_e", r.p_e},
                   {"trials", r.trial_count},
                   {"accepts", r.accept_count},
                   {"p_hat", r.p_hat},
                   {"ci_low", r.ci_low},
                   {"ci_high", r.ci_high},
                   {"cond_err", r.conditional_logical_error},
                   {"cond_err_lo", r.cond_err_lo},
                   {"cond_err_hi", r.cond_err_hi},
                   {"frame_rate", r.frame_error_rate},
                   {"seed", r.seed}});
  }
  return arr.dump(2) + "\n";
}

std::string resource_csv(const std::vector<CurveRow>& rows) {
  std::ostringstream out;
  out << "p_e,N,l_bar,R_0,R_h,R_plus,R_S,R_D\n";
  for (const auto& r : rows) {
    out << format_double(r.p_e) << ',' << format_n(r.log10_N) << ',' << r.l_bar << ','
        << rational_field(r.r0) << ',' << rational_field(r.rh) << ','
        << rational_field(r.rplus) << ',' << rational_field(r.rs) << ','
        << rational_field(r.rd) << '\n';
  }
  return out.str();
}

std::string resource_json(const std::vector<CurveRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    arr.push_back({{"p_e", r.p_e},
                   {"log10_N", r.log10_N},
                   {"l_bar", r.l_bar},
                   {"R_0", r.r0.convert_to<double>()},
                   {"R_h", r.rh.convert_to<double>()},
                   {"R_plus", r.rplus.convert_to<double>()},
                   {"R_S", r.rs.convert_to<double>()},
                   {"R_D", r.rd.convert_to<double>()}});
  }
  return arr.dump(2) + "\n";
}

std::vector<OverlayPoint> parse_overlay_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  std::vector<OverlayPoint> out;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "N,R")
        throw std::invalid_argument("overlay line " + std::to_string(lineno) +
                                    ": expected header 'N,R', got '" + line + "'");
      header_seen = true;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 2)
      throw std::invalid_argument("overlay line " + std::to_string(lineno) +
                                  ": expected 2 fields");
    OverlayPoint p;
    p.log10_N = parse_n(f[0], lineno);
    p.r = parse_double(f[1], lineno);
    out.push_back(p);
  }
  return out;
}

std::string resource_csv_with_overlay(const std::vector<CurveRow>& rows,
                                      const std::vector<OverlayPoint>& overlay) {
  std::ostringstream out;
  out << "source,p_e,N,l_bar,R_0,R_h,R_plus,R_S,R_D\n";
  for (const auto& r : rows) {
    out << "lc," << format_double(r.p_e) << ',' << format_n(r.log10_N) << ',' << r.l_bar << ','
        << rational_field(r.r0) << ',' << rational_field(r.rh) << ','
        << rational_field(r.rplus) << ',' << rational_field(r.rs) << ','
        << rational_field(r.rd) << '\n';
  }
  for (const auto& p : overlay)
    out << "overlay,," << format_n(p.log10_N) << ",," << format_double(p.r) << ",,,,\n";
  return out.str();
}

}  // namespace ftc
