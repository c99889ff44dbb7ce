// Copyright 2026 The qgamble Authors
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

// Tabular reports and their CSV / JSON serializations.
//
// CSV: header line first, '\n' line endings, doubles with 17 significant
// digits, fields quoted only when they contain ',', '"' or a newline.
// JSON: one object {"config", "rows", "audit"?} in that key order, row
// keys equal to the CSV header names.

#ifndef QGAMBLE_REPORT_HPP
#define QGAMBLE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "qgamble/correlation.hpp"
#include "qgamble/gamespace.hpp"
#include "qgamble/roundwaves.hpp"

namespace qgamble {

using Json = nlohmann::ordered_json;

// A null cell serializes as an empty CSV field and JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string,
                          std::vector<double>>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  Json config = Json::object();
  Table table;
  std::optional<Json> audit;
};

std::string format_double(double value);

std::string write_csv(const Table& table);
std::string write_json(const Report& report);

Json gamespace_json(const GameSpace& gs);

Table operator_table(const OperatorSet& ops);
Table audit_table(const CommutatorAudit& audit);
Json audit_json(const CommutatorAudit& audit);
Table spectrum_table(const CorrelationReport& report);
Table variance_table(const GameSpace& gs, const VarianceResult& result);
Table density_table(const DensityGrid& grid);
Table peaks_table(const PeakSet& peaks);
Table classical_table(std::span<const double> xi, std::span<const double> classical,
                      std::span<const double> quantum);
Table comparison_table(const ComparisonReport& report);
Table eigenfunction_table(const CorrelationEigenfunction& fn);
Json eigenfunction_json(const CorrelationEigenfunction& fn);
Table divergence_table(const DivergenceReport& report);
Json divergence_json(const DivergenceReport& report);

}  // namespace qgamble

#endif  // QGAMBLE_REPORT_HPP
