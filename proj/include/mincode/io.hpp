#pragma once

#include <bit>
#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mincode/boolfn.hpp"
#include "mincode/code.hpp"
#include "mincode/errors.hpp"
#include "mincode/minimal.hpp"
#include "mincode/spread.hpp"

namespace mincode::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline long long parse_integer(std::string_view s, const char* what) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw ParseError(std::string(what) + ": bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

/// "n=<int>" on the first line, then 2^n characters '0'/'1' with f(x) at position x.
inline BooleanFunction read_truth_table(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("truth table: missing header line");
  header = detail::trim(header);
  if (header.rfind("n=", 0) != 0) throw ParseError("truth table: header must read n=<int>");
  const auto n = detail::parse_integer(std::string_view(header).substr(2), "truth table");
  if (n < 0 || n > kMaxDimension) throw ParseError("truth table: n out of range");
  std::string bits;
  if (!std::getline(in, bits)) throw ParseError("truth table: missing table line");
  bits = detail::trim(bits);
  const std::size_t len = std::size_t{1} << n;
  if (bits.size() != len) {
    throw ParseError("truth table: expected " + std::to_string(len) + " characters, got " + std::to_string(bits.size()));
  }
  BitVector table(len);
  for (std::size_t x = 0; x < len; ++x) {
    if (bits[x] == '1') {
      table.set(x);
    } else if (bits[x] != '0') {
      throw ParseError("truth table: invalid character at position " + std::to_string(x));
    }
  }
  return BooleanFunction(static_cast<int>(n), std::move(table));
}

inline void write_truth_table(std::ostream& out, const BooleanFunction& f) {
  out << "n=" << f.n() << '\n';
  for (Point x = 0; x < f.domain_size(); ++x) out << (f(x) ? '1' : '0');
  out << '\n';
}

inline void write_spectrum_csv(std::ostream& out, const WalshSpectrum& s) {
  out << "w,value\n";
  for (Point w = 0; w < s.size(); ++w) out << w << ',' << s[w] << '\n';
}

/// Reads a "w,value" CSV; rows must cover 0..2^n-1 in order.
inline WalshSpectrum read_spectrum_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || detail::trim(line) != "w,value") throw ParseError("spectrum: header must be w,value");
  WalshSpectrum s;
  while (std::getline(in, line)) {
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("spectrum: missing comma in '" + line + "'");
    const auto w = detail::parse_integer(std::string_view(line).substr(0, comma), "spectrum");
    const auto v = detail::parse_integer(std::string_view(line).substr(comma + 1), "spectrum");
    if (w != static_cast<long long>(s.values.size())) throw ParseError("spectrum: rows must be in index order");
    s.values.push_back(static_cast<std::int32_t>(v));
  }
  const std::size_t len = s.values.size();
  if (len == 0 || (len & (len - 1)) != 0) throw ParseError("spectrum: row count must be a power of two");
  s.n = std::countr_zero(len);
  return s;
}

inline void write_weights_csv(std::ostream& out, const WeightDistribution& d) {
  out << "weight,multiplicity\n";
  for (const auto& [w, m] : d.entries) out << w << ',' << m << '\n';
}

/// One row per weight present in either distribution.
inline void write_weights_diff_csv(std::ostream& out, const WeightDistribution& predicted,
                                   const WeightDistribution& enumerated) {
  out << "weight,predicted,enumerated,match\n";
  std::map<std::size_t, int> keys;
  for (const auto& [w, m] : predicted.entries) keys[w] = 0;
  for (const auto& [w, m] : enumerated.entries) keys[w] = 0;
  for (const auto& [w, unused] : keys) {
    const auto p = predicted.multiplicity(w);
    const auto e = enumerated.multiplicity(w);
    out << w << ',' << p << ',' << e << ',' << (p == e ? "yes" : "no") << '\n';
  }
}

/// One generator row per line, coordinate x - 1 at column x - 1.
inline void write_generator(std::ostream& out, const GF2Matrix& g) {
  for (const auto& row : g.row_list()) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (row.test(i) ? '1' : '0');
    out << '\n';
  }
}

inline Json to_json(const SetSystem& sys) {
  return Json{{"t", sys.t()}, {"A1", sys.indices(1)}, {"A2", sys.indices(2)}, {"A3", sys.indices(3)}};
}

inline SetSystem set_system_from_json(const Json& j) {
  try {
    return SetSystem::from_indices(j.at("t").get<int>(), j.at("A1").get<std::vector<int>>(),
                                   j.at("A2").get<std::vector<int>>(), j.at("A3").get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("set system JSON: ") + e.what());
  }
}

inline Json to_json(const SetStatistics& st) {
  return Json{{"s1", st.s1},       {"s2", st.s2},       {"s3", st.s3},         {"s12", st.s12},
              {"s13", st.s13},     {"s23", st.s23},     {"s123", st.s123},     {"chi12", st.chi12},
              {"chi13", st.chi13}, {"chi23", st.chi23}, {"chi123", st.chi123}, {"epsilon", st.epsilon},
              {"mu", st.mu}};
}

inline Json to_json(const ConditionReport& r) {
  return Json{{"passed", r.passed()},
              {"condition1", r.condition1},
              {"condition2", r.condition2},
              {"condition3", r.condition3},
              {"triple_intersection_nonempty", r.triple_intersection_nonempty},
              {"pairwise_intersections_differing", r.pairwise_intersections_differing},
              {"witnesses", r.witnesses}};
}

inline Json to_json(const WeightDistribution& d) {
  Json arr = Json::array();
  for (const auto& [w, m] : d.entries) arr.push_back(Json{{"weight", w}, {"multiplicity", m}});
  return arr;
}

inline Json to_json(const std::vector<Table1Row>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back(Json{{"weight_expr", r.weight_expr},
                       {"multiplicity_expr", r.multiplicity_expr},
                       {"weight", r.weight},
                       {"multiplicity", r.multiplicity}});
  }
  return arr;
}

inline Json to_json(const CriterionViolation& v) {
  return Json{{"phi1", label(v.phi1)}, {"phi2", label(v.phi2)}, {"x", v.x}, {"y", v.y}, {"inequality", v.inequality}};
}

inline Json to_json(const MinimalityReport& r) {
  Json j{{"is_minimal", r.is_minimal}, {"method", r.method}};
  if (r.cover) {
    j["witness"] = Json{{"covering_message", r.cover->covering_message},
                        {"covered_message", r.cover->covered_message},
                        {"covering", r.cover->covering.to_string()},
                        {"covered", r.cover->covered.to_string()},
                        {"independent", r.cover->independent}};
  } else if (r.violation) {
    j["witness"] = to_json(*r.violation);
  }
  j["wt_min"] = r.ab.wt_min;
  j["wt_max"] = r.ab.wt_max;
  j["ab_ratio"] = r.ab.ratio.to_string();
  j["ab_violating"] = r.ab.violating;
  return j;
}

inline Json to_json(const PropositionReport& rep) {
  Json arr = Json::array();
  for (const auto& p : rep.results) {
    Json j{{"name", p.name}, {"inequality", p.inequality}, {"checked", p.checked}, {"passed", p.passed()}};
    if (p.witness) j["witness"] = to_json(*p.witness);
    arr.push_back(std::move(j));
  }
  return arr;
}

/// Parameters, distribution and the un-aggregated weight table for a spread code.
inline Json code_report(const SetSystem& sys, const LinearCode& code, const WeightDistribution& enumerated) {
  const auto& st = sys.stats();
  Json j{{"n", code.n}, {"t", sys.t()}, {"length", code.length}, {"dimension", code.dimension}};
  j["wt_min"] = enumerated.min_nonzero();
  j["wt_max"] = enumerated.max_weight();
  j["wt_max_candidate"] = (std::int64_t{1} << (code.n - 1)) + (std::int64_t{1} << sys.t()) - st.epsilon;
  j["sets"] = to_json(sys);
  j["statistics"] = to_json(st);
  j["distribution"] = to_json(enumerated);
  j["table1_rows"] = to_json(predict_table1(sys));
  return j;
}

}  // namespace mincode::io
