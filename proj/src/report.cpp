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

#include "qgamble/report.hpp"

#include <cstdio>
#include <sstream>

namespace qgamble {

namespace {

std::string quote_if_needed(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

std::string csv_field(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return quote_if_needed(v); }
    std::string operator()(const std::vector<double>& v) const { return quote_if_needed(join(v)); }
  };
  return std::visit(Visitor{}, cell);
}

Json json_value(const Cell& cell) {
  struct Visitor {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(std::int64_t v) const { return v; }
    Json operator()(double v) const { return v; }
    Json operator()(bool v) const { return v; }
    Json operator()(const std::string& v) const { return v; }
    Json operator()(const std::vector<double>& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

void append_matrix(Table& table, const std::string& name, const MatrixXc& m) {
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      table.rows.push_back({name, std::int64_t{r}, std::int64_t{c}, std::real(m(r, c)),
                            std::imag(m(r, c))});
    }
  }
}

void append_diagonal(Table& table, const std::string& name, const RealVector<double>& d) {
  for (Index i = 0; i < d.size(); ++i) {
    table.rows.push_back({name, std::int64_t{i}, std::int64_t{i}, d(i), 0.0});
  }
}

void append_scalar(Table& table, const std::string& name, std::complex<double> v) {
  table.rows.push_back({name, std::monostate{}, std::monostate{}, std::real(v), std::imag(v)});
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string write_csv(const Table& table) {
  std::ostringstream os;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) os << ',';
    os << quote_if_needed(table.header[i]);
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << csv_field(row[i]);
    }
    os << '\n';
  }
  return os.str();
}

std::string write_json(const Report& report) {
  Json doc = Json::object();
  doc["config"] = report.config;
  Json rows = Json::array();
  for (const auto& row : report.table.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size() && i < report.table.header.size(); ++i) {
      obj[report.table.header[i]] = json_value(row[i]);
    }
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  if (report.audit) doc["audit"] = *report.audit;
  return doc.dump(2) + "\n";
}

Json gamespace_json(const GameSpace& gs) {
  Json j = Json::object();
  j["rounds_max"] = gs.rounds_max();
  j["dim"] = gs.dim();
  j["mode"] = std::string(to_string(gs.mode()));
  j["kappa1"] = gs.kappa1();
  j["kappa2"] = gs.kappa2();
  return j;
}

Table operator_table(const OperatorSet& ops) {
  Table t{{"operator", "row", "col", "re", "im"}, {}};
  append_matrix(t, "a_plus", ops.a_plus);
  append_matrix(t, "a_minus", ops.a_minus);
  append_matrix(t, "number", ops.number);
  append_matrix(t, "pi1", ops.pi1);
  append_matrix(t, "pi2", ops.pi2);
  append_matrix(t, "precorrelation", ops.precorrelation);
  return t;
}

Table audit_table(const CommutatorAudit& audit) {
  Table t{{"quantity", "row", "col", "re", "im"}, {}};
  append_matrix(t, "ladder_commutator", audit.ladder_commutator);
  append_matrix(t, "payoff_commutator", audit.payoff_commutator);
  append_diagonal(t, "finite_pattern", audit.finite_pattern);
  append_diagonal(t, "finite_pattern_deviation", audit.finite_pattern_deviation);
  append_diagonal(t, "periodic_pattern", audit.periodic_pattern);
  append_diagonal(t, "periodic_pattern_deviation", audit.periodic_pattern_deviation);
  append_diagonal(t, "trace_free_pattern", audit.trace_free_pattern);
  append_scalar(t, "ladder_commutator_trace", audit.ladder_commutator_trace);
  append_scalar(t, "interior_deviation", audit.interior_deviation);
  append_scalar(t, "interior_sign", static_cast<double>(audit.interior_sign));
  append_scalar(t, "finite_pattern_max_deviation", audit.finite_pattern_max_deviation);
  append_scalar(t, "periodic_pattern_max_deviation", audit.periodic_pattern_max_deviation);
  append_scalar(t, "trace_free_pattern_max_deviation", audit.trace_free_pattern_max_deviation);
  append_scalar(t, "ground_sector_commutator", audit.ground_sector_commutator);
  return t;
}

Json audit_json(const CommutatorAudit& audit) {
  Json j = Json::object();
  j["ladder_commutator_trace"] = audit.ladder_commutator_trace;
  j["interior_deviation"] = audit.interior_deviation;
  j["interior_sign"] = audit.interior_sign;
  j["finite_pattern_max_deviation"] = audit.finite_pattern_max_deviation;
  j["periodic_pattern_max_deviation"] = audit.periodic_pattern_max_deviation;
  j["trace_free_pattern_max_deviation"] = audit.trace_free_pattern_max_deviation;
  j["ground_sector_commutator_re"] = std::real(audit.ground_sector_commutator);
  j["ground_sector_commutator_im"] = std::imag(audit.ground_sector_commutator);
  return j;
}

Table spectrum_table(const CorrelationReport& report) {
  Table t{{"index", "eigenvalue", "parity", "exp_pi1", "exp_pi2", "sigma1", "sigma2",
           "correlation", "pearson", "sign_class"},
          {}};
  for (std::size_t k = 0; k < report.rows.size(); ++k) {
    const auto& r = report.rows[k];
    Cell pearson = std::monostate{};
    if (r.pearson) pearson = *r.pearson;
    t.rows.push_back({static_cast<std::int64_t>(k), r.eigenvalue, std::string(to_string(r.parity)),
                      r.exp_pi1, r.exp_pi2, r.sigma1, r.sigma2, r.correlation, pearson,
                      std::int64_t{r.sign_class}});
  }
  return t;
}

Table variance_table(const GameSpace& gs, const VarianceResult& result) {
  Table t{{"rounds_max", "n", "player", "kappa", "value", "expected", "interior"}, {}};
  t.rows.push_back({std::int64_t{gs.rounds_max()}, std::int64_t{result.n},
                    std::int64_t{static_cast<int>(result.player)}, gs.kappa(result.player),
                    result.value, result.expected, result.interior});
  return t;
}

Table density_table(const DensityGrid& grid) {
  Table t{{"xi", "psi", "density"}, {}};
  for (std::size_t i = 0; i < grid.xi.size(); ++i) {
    t.rows.push_back({grid.xi[i], grid.psi[i], grid.density[i]});
  }
  return t;
}

Table peaks_table(const PeakSet& peaks) {
  Table t{{"n", "maxima", "classical_centers"}, {}};
  t.rows.push_back({std::int64_t{peaks.n}, peaks.maxima, peaks.classical_centers});
  return t;
}

Table classical_table(std::span<const double> xi, std::span<const double> classical,
                      std::span<const double> quantum) {
  Table t{{"xi", "classical_density", "quantum_density"}, {}};
  for (std::size_t i = 0; i < xi.size(); ++i) t.rows.push_back({xi[i], classical[i], quantum[i]});
  return t;
}

Table comparison_table(const ComparisonReport& r) {
  Table t{{"n", "quantum_maxima", "classical_centers", "quantum_center_density",
           "classical_center_density", "quantum_minimum_deeper", "quantum_variance",
           "classical_variance", "outermost_quantum_peak", "outermost_deviation"},
          {}};
  Cell deeper = std::monostate{};
  if (r.quantum_minimum_deeper) deeper = *r.quantum_minimum_deeper;
  t.rows.push_back({std::int64_t{r.n}, r.quantum_maxima, r.classical_centers,
                    r.quantum_center_density, r.classical_center_density, deeper,
                    r.quantum_variance, r.classical_variance, r.outermost_quantum_peak,
                    r.outermost_deviation});
  return t;
}

Table eigenfunction_table(const CorrelationEigenfunction& fn) {
  Table t{{"xi", "re", "im", "abs"}, {}};
  for (std::size_t i = 0; i < fn.xi.size(); ++i) {
    t.rows.push_back({fn.xi[i], std::real(fn.values[i]), std::imag(fn.values[i]),
                      std::abs(fn.values[i])});
  }
  return t;
}

Json eigenfunction_json(const CorrelationEigenfunction& fn) {
  Json j = Json::object();
  j["exponent_re"] = std::real(fn.exponent);
  j["exponent_im"] = std::imag(fn.exponent);
  j["ode_residual"] = fn.ode_residual;
  j["max_abs"] = fn.max_abs;
  return j;
}

Table divergence_table(const DivergenceReport& r) {
  Table t{{"kind", "cutoff", "integral", "linear_rel_residual", "log_rel_residual", "growth"}, {}};
  for (std::size_t i = 0; i < r.cutoffs.size(); ++i) {
    t.rows.push_back({std::string(to_string(r.kind)), r.cutoffs[i], r.integrals[i],
                      r.linear.relative_residual, r.logarithmic.relative_residual,
                      std::string(to_string(r.growth))});
  }
  return t;
}

Json divergence_json(const DivergenceReport& r) {
  Json j = Json::object();
  j["growth"] = std::string(to_string(r.growth));
  j["linear_slope"] = r.linear.slope;
  j["linear_intercept"] = r.linear.intercept;
  j["linear_rel_residual"] = r.linear.relative_residual;
  j["log_slope"] = r.logarithmic.slope;
  j["log_intercept"] = r.logarithmic.intercept;
  j["log_rel_residual"] = r.logarithmic.relative_residual;
  return j;
}

}  // namespace qgamble
