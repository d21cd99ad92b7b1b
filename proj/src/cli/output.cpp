// Copyright 2026 The catfilter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "catfilter/cli.hpp"

namespace catfilter::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

std::filesystem::path write_table(const Table& t, const RunConfig& cfg) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) throw Error("cannot create output directory " + cfg.output_dir.string() + ": " + ec.message());

  const bool json = cfg.format == Format::kJson;
  const std::filesystem::path file = cfg.output_dir / (t.stem + (json ? ".json" : ".csv"));
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot write " + file.string());

  if (json) {
    nlohmann::ordered_json doc;
    doc["columns"] = t.columns;
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      auto& r = rows.emplace_back(nlohmann::ordered_json::array());
      for (double x : row) {
        if (std::isfinite(x)) {
          r.push_back(x);
        } else {
          r.push_back(nullptr);
        }
      }
    }
    out << doc.dump(1) << '\n';
  } else {
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
      out << '\n';
    }
  }
  if (!out) throw Error("write failed for " + file.string());
  return file;
}

}  // namespace catfilter::cli
