#pragma once

// File formats.
//   basis file:  {"basis": ["1 2", "3 1 2"]}
//   terms file:  JSON array of decimal strings (or integers), or one decimal
//                integer per line; blank lines and lines starting with '#'
//                are skipped.

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmachine/count_series.hpp"
#include "cmachine/permutation.hpp"

namespace cmachine::io {

/// Malformed or unreadable input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline PatternSet parse_basis_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("basis file is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array())
    throw DataError("basis file needs {\"basis\": [...]}");
  std::vector<std::string> pats;
  for (const auto& p : j["basis"]) {
    if (!p.is_string()) throw DataError("basis entries must be strings like \"3 1 2\"");
    pats.push_back(p.get<std::string>());
  }
  try {
    return PatternSet::parse(pats);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
}

inline PatternSet read_basis(const std::string& path) { return parse_basis_json(read_file(path)); }

inline nlohmann::json basis_json(const PatternSet& b) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : b) arr.push_back(p.to_string());
  return {{"basis", arr}};
}

inline BigInt parse_decimal(const std::string& s) {
  BigInt v;
  std::string t = s;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  std::size_t b = 0;
  while (b < t.size() && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
  t = t.substr(b);
  if (t.empty() || v.set_str(t, 10) != 0) throw DataError("not a decimal integer: '" + s + "'");
  return v;
}

inline CountSeries parse_terms(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  CountSeries out;
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(std::string("terms file is not JSON: ") + e.what());
    }
    for (const auto& v : j) {
      if (v.is_string())
        out.coeffs.push_back(parse_decimal(v.get<std::string>()));
      else if (v.is_number_integer())
        out.coeffs.push_back(parse_decimal(v.dump()));
      else
        throw DataError("terms must be decimal strings or integers");
    }
    return out;
  }
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    out.coeffs.push_back(parse_decimal(line));
  }
  return out;
}

inline CountSeries read_terms(const std::string& path) { return parse_terms(read_file(path)); }

inline nlohmann::json terms_json(const CountSeries& s) { return s.to_strings(); }

inline void write_terms(std::ostream& os, const CountSeries& s, bool json) {
  if (json) {
    os << terms_json(s).dump() << "\n";
    return;
  }
  for (const auto& c : s.coeffs) os << c.get_str() << "\n";
}

}  // namespace cmachine::io
