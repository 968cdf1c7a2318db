// Copyright 2026 The untelegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Flat output records and their CSV / line-delimited JSON renderings.

#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace untelegraph::cli {

using Field = std::variant<std::monostate, bool, std::int64_t, std::uint64_t, double, std::string>;

struct Record {
  std::vector<std::pair<std::string, Field>> fields;

  Record& add(std::string key, Field value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_cell(const Field& f) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
  };
  return std::visit(Visitor{}, f);
}

inline std::string csv_header(const Record& r) {
  std::string out;
  for (std::size_t i = 0; i < r.fields.size(); ++i) {
    if (i) out += ',';
    out += r.fields[i].first;
  }
  return out + "\n";
}

inline std::string csv_row(const Record& r) {
  std::string out;
  for (std::size_t i = 0; i < r.fields.size(); ++i) {
    if (i) out += ',';
    out += csv_cell(r.fields[i].second);
  }
  return out + "\n";
}

inline std::string json_line(const Record& r) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.fields) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::monostate>) {
            obj[key] = nullptr;
          } else {
            obj[key] = v;
          }
        },
        value);
  }
  return obj.dump() + "\n";
}

/// Header once, then one row per record; every record must share the header.
inline std::string render_csv(const std::vector<Record>& records) {
  if (records.empty()) return "";
  std::string out = csv_header(records.front());
  for (const auto& r : records) out += csv_row(r);
  return out;
}

inline std::string render_json(const std::vector<Record>& records) {
  std::string out;
  for (const auto& r : records) out += json_line(r);
  return out;
}

}  // namespace untelegraph::cli
