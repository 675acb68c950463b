#pragma once

/**
 * @file io.hpp
 * @brief Text and JSON formats.
 *
 * Truth-table text:
 *
 *     # comment lines start with '#'
 *     p n
 *     <p^n base-p digits, digit i = value at point index i>
 *
 * Digits above 9 (p = 11, 13) are written 'a', 'b', 'c'. Blank lines are
 * skipped like comments.
 *
 * Spectrum JSON:
 *
 *     {"p":3,"n":1,"convention":"S(z)=sum f(x) xi^-<x,z>","values":[[3,0],[0,0],[0,0]]}
 *
 * with one coefficient vector (length p-1, power basis) per point index.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbent/bent.hpp"
#include "pbent/neighbors.hpp"
#include "pbent/spectral.hpp"

namespace pbent {

inline constexpr std::string_view kSpectrumConvention = "S(z)=sum f(x) xi^-<x,z>";

inline char digit_char(int v) { return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10)); }

inline int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

/// The p^n-character digit string of a table.
inline std::string tt_digits(const TruthTable& t) {
  std::string s;
  s.reserve(t.values.size());
  for (auto v : t.values) s += digit_char(v);
  return s;
}

/// Full file text: header line and digit line.
inline std::string format_tt(const TruthTable& t) {
  return std::to_string(t.params.p()) + " " + std::to_string(t.params.n()) + "\n" + tt_digits(t) + "\n";
}

inline TruthTable tt_from_digits(const Params& params, std::string_view digits, std::size_t line = 1) {
  if (digits.size() != params.size()) {
    throw ParseError("wrong length: expected " + std::to_string(params.size()) + " digits, got " +
                         std::to_string(digits.size()),
                     line, digits.size() + 1);
  }
  std::vector<std::uint8_t> v(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const int d = digit_value(digits[i]);
    if (d < 0 || d >= params.p()) {
      throw ParseError(std::string("out-of-range digit '") + digits[i] + "' for p=" + std::to_string(params.p()), line,
                       i + 1);
    }
    v[i] = static_cast<std::uint8_t>(d);
  }
  return TruthTable(params, std::move(v));
}

inline TruthTable parse_tt(std::string_view text, const Limits& limits = {}) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] != '#') lines.emplace_back(lineno, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError("malformed header: missing \"p n\" line", lineno, 1);

  const auto& [hline, header] = lines[0];
  std::istringstream hs(header);
  long long p = 0;
  long long n = 0;
  std::string rest;
  if (!(hs >> p >> n) || (hs >> rest)) throw ParseError("malformed header: expected \"p n\"", hline, 1);
  Params params = [&] {
    try {
      return Params::make(static_cast<int>(p), static_cast<int>(n), limits.max_points);
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string("malformed header: ") + e.what(), hline, 1);
    }
  }();
  if (lines.size() < 2) throw ParseError("wrong length: missing digit line", lineno, 1);
  if (lines.size() > 2) throw ParseError("unexpected content after the digit line", lines[2].first, 1);
  std::string digits = lines[1].second;
  while (!digits.empty() && (digits.back() == ' ' || digits.back() == '\t')) digits.pop_back();
  return tt_from_digits(params, digits, lines[1].first);
}

inline TruthTable read_tt_file(const std::string& path, const Limits& limits = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tt(ss.str(), limits);
}

template <class Tag>
nlohmann::json values_to_json(const CycField<Tag>& f) {
  auto arr = nlohmann::json::array();
  for (const auto& v : f.values) arr.push_back(std::vector<std::int64_t>(v.coeffs().begin(), v.coeffs().end()));
  return arr;
}

/// Keys in the documented order: p, n, convention, values.
inline std::string spectrum_json_text(const Spectrum& s) {
  nlohmann::ordered_json j;
  j["p"] = s.params.p();
  j["n"] = s.params.n();
  j["convention"] = std::string(kSpectrumConvention);
  j["values"] = values_to_json(s);
  return j.dump();
}

inline Spectrum spectrum_from_json(const nlohmann::json& j, const Limits& limits = {}) {
  try {
    const auto params = Params::make(j.at("p").get<int>(), j.at("n").get<int>(), limits.max_points);
    if (j.contains("convention") && j.at("convention").get<std::string>() != kSpectrumConvention) {
      throw InvalidArgument("unsupported spectrum convention");
    }
    const auto& vals = j.at("values");
    if (!vals.is_array() || vals.size() != params.size()) throw InvalidArgument("spectrum needs p^n values");
    std::vector<CycInt> out;
    out.reserve(vals.size());
    for (const auto& v : vals) out.push_back(CycInt::from_coeffs(params.p(), v.get<std::vector<std::int64_t>>()));
    return Spectrum(params, std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed spectrum JSON: ") + e.what());
  }
}

inline std::string signal_json_text(const Signal& s) {
  nlohmann::ordered_json j;
  j["p"] = s.params.p();
  j["n"] = s.params.n();
  j["values"] = values_to_json(s);
  return j.dump();
}

inline nlohmann::ordered_json neighbor_report_to_json(const NeighborReport& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["d"] = r.d;
  j["base"] = r.base_label.empty() ? tt_digits(r.base) : r.base_label;
  j["census_size"] = r.census_size;
  j["formula_value"] = r.formula_value;
  j["alt_value"] = r.alt_value;
  j["verdict"] = to_string(r.verdict);
  auto subs = nlohmann::ordered_json::array();
  for (const auto& [gamma, count] : r.per_subspace) subs.push_back({{"subspace", gamma.to_string()}, {"count", count}});
  j["per_subspace"] = subs;
  auto shortfalls = nlohmann::ordered_json::array();
  for (const auto& gamma : r.shortfalls) shortfalls.push_back(gamma.to_string());
  j["shortfalls"] = shortfalls;
  auto members = nlohmann::ordered_json::array();
  for (const auto& t : r.members) members.push_back(tt_digits(t));
  j["members"] = members;
  return j;
}

}  // namespace pbent
