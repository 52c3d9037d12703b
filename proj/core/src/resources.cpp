#include "ftc/resources.hpp"

#include <sstream>
#include <stdexcept>

namespace ftc {

namespace {

// n^S, n^D, n^0, n^b per cluster type.
struct Coeffs {
  int s, d, zero, b;
};
constexpr Coeffs kCoeffH = {2, 3, 6, 4};
constexpr Coeffs kCoeff0 = {6, 7, 11, 15};
constexpr Coeffs kCoeffP = {5, 6, 10, 14};

Rational at(const std::map<int, Rational>& m, int l, const char* what) {
  auto it = m.find(l);
  if (it == m.end())
    throw std::invalid_argument(std::string("resource vector incomplete: missing ") + what +
                                " at level " + std::to_string(l));
  return it->second;
}

/// R_S^(l) and R_D^(l) from the level-l cluster costs (l >= 2).
void fill_sd(int l, ResourceVector& vec) {
  if (l < 2 || vec.S.count(l)) return;
  const Rational rh = at(vec.h, l, "R_h");
  const Rational rp = at(vec.plus, l, "R_+");
  const Rational rb = ResourceVector::b(l);
  vec.S[l] = 7 * rh + 2 * (rp + rb);
  vec.D[l] = 21 * rh + 8 * (rp + rb) + 2 * rb;
}

}  // namespace

void SuccessTable::check_alpha(char alpha) {
  if (alpha != 'h' && alpha != '0' && alpha != '+')
    throw std::invalid_argument("success table: cluster type must be one of h, 0, +");
}

void SuccessTable::set(char alpha, int level, const Rational& p, const std::string& source) {
  check_alpha(alpha);
  if (level < 1) throw std::invalid_argument("success table: level >= 1 required");
  if (p <= 0 || p > 1)
    throw std::invalid_argument("success table: probability must lie in (0, 1]");
  if (source != "monte-carlo" && source != "user" && source != "asymptotic-one")
    throw std::invalid_argument("success table: unknown source tag " + source);
  entries_[{alpha, level}] = {p, source};
}

SuccessTable::Entry SuccessTable::get(char alpha, int level) const {
  check_alpha(alpha);
  auto it = entries_.find({alpha, level});
  if (it != entries_.end()) return it->second;
  if (level >= 3) return {Rational(1), "asymptotic-one"};
  throw std::out_of_range(std::string("success table: p_") + alpha + "^(" +
                          std::to_string(level) + ") must be supplied below level 3");
}

bool SuccessTable::has(char alpha, int level) const {
  return entries_.count({alpha, level}) > 0 || level >= 3;
}

SuccessTable SuccessTable::unit(int max_level) {
  SuccessTable t;
  for (int l = 1; l <= max_level; ++l)
    for (char a : {'h', '0', '+'}) t.set(a, l, 1, "user");
  return t;
}

SuccessTable SuccessTable::parse(const std::string& text) {
  SuccessTable t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto fail = [&](const std::string& why) {
      throw std::invalid_argument("success table line " + std::to_string(lineno) + ": " + why);
    };
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail("expected <alpha>.<level>=<probability>");
    std::string key = line.substr(first, eq - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    if (key.size() < 3 || key[1] != '.') fail("key must look like h.2");
    int level = 0;
    try {
      std::size_t used = 0;
      level = std::stoi(key.substr(2), &used);
      if (used != key.size() - 2) fail("trailing characters in level");
    } catch (const std::invalid_argument&) {
      fail("level is not an integer");
    }
    double p = 0.0;
    try {
      std::size_t used = 0;
      const std::string val = line.substr(eq + 1);
      p = std::stod(val, &used);
      while (used < val.size() &&
             (val[used] == ' ' || val[used] == '\t' || val[used] == '\r'))
        ++used;
      if (used != val.size()) fail("trailing characters in probability");
    } catch (const std::invalid_argument&) {
      fail("probability is not a number");
    }
    try {
      t.set(key[0], level, Rational(p), "user");
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  return t;
}

std::string SuccessTable::serialize() const {
  std::ostringstream out;
  for (const auto& [key, entry] : entries_)
    out << key.first << '.' << key.second << '=' << entry.p.convert_to<double>() << '\n';
  return out.str();
}

Rational ResourceVector::b(int level) {
  if (level < 0) throw std::invalid_argument("R_b: level >= 0 required");
  Rational r = 1;
  for (int i = 0; i < level; ++i) r *= 7;
  return r;
}

int ResourceVector::max_level() const {
  int top = 0;
  for (const auto& [l, _] : h) top = std::max(top, l);
  return top;
}

ResourceVector level1_base(const Rational& p0_1, const Rational& pplus_1) {
  if (p0_1 <= 0 || pplus_1 <= 0)
    throw std::invalid_argument("level1_base: success probabilities must be positive");
  ResourceVector vec;
  vec.zero[1] = Rational(69) / p0_1;
  vec.plus[1] = Rational(72) / pplus_1;
  vec.S[1] = 21 + 2 * vec.zero[1];
  vec.D[1] = 63 + 8 * vec.zero[1];
  vec.h[1] = 0;  // no |h^(1)> is used: the level-1 gadgets are direct circuits
  return vec;
}

void recurrence_step(int l, ResourceVector& vec, const SuccessTable& table) {
  if (l < 1) throw std::invalid_argument("recurrence_step: l >= 1 required");
  fill_sd(l, vec);
  const Rational rs = at(vec.S, l, "R_S");
  const Rational rd = at(vec.D, l, "R_D");
  // The l = 1 gadget set has no verified |0^(1)> consumer slot of its own:
  // the n^0 coefficient multiplies R_+^(1) instead when stepping from l = 1.
  const Rational r0 = l == 1 ? at(vec.plus, l, "R_+") : at(vec.zero, l, "R_0");
  const Rational rb = ResourceVector::b(l);
  const auto step = [&](const Coeffs& c, char alpha) {
    return (c.s * rs + c.d * rd + c.zero * r0 + c.b * rb) / table.get(alpha, l + 1).p;
  };
  vec.h[l + 1] = step(kCoeffH, 'h');
  vec.zero[l + 1] = step(kCoeff0, '0');
  vec.plus[l + 1] = step(kCoeffP, '+');
}

ComputationResources resources_for_computation(double log10_N, const NoiseModel& model,
                                               const SuccessTable& table) {
  const double p_q0 = physical_to_p_q0(model);
  ComputationResources out;
  out.l_bar = highest_level(log10_N, p_q0);  // throws above threshold
  const int top = std::max(out.l_bar, 1);
  out.vec = level1_base(table.get('0', 1).p, table.get('+', 1).p);
  for (int l = 1; l < top; ++l) recurrence_step(l, out.vec, table);
  fill_sd(top, out.vec);
  out.headline_r0 = out.vec.zero.at(top);
  return out;
}

std::vector<CurveRow> resource_curve(const std::vector<double>& log10_N_grid,
                                     const std::vector<double>& p_e_list,
                                     const SuccessTable& table) {
  if (log10_N_grid.empty()) throw std::invalid_argument("resource_curve: empty N grid");
  std::vector<CurveRow> rows;
  for (double p_e : p_e_list) {
    const NoiseModel model = NoiseModel::uniform_depolarizing(p_e);
    for (double log10_N : log10_N_grid) {
      const auto res = resources_for_computation(log10_N, model, table);
      const int top = std::max(res.l_bar, 1);
      CurveRow row;
      row.p_e = p_e;
      row.log10_N = log10_N;
      row.l_bar = res.l_bar;
      row.r0 = res.vec.zero.at(top);
      row.rh = res.vec.h.at(top);
      row.rplus = res.vec.plus.at(top);
      row.rs = res.vec.S.at(top);
      row.rd = res.vec.D.at(top);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace ftc
