#ifndef QSCAT_TABLE_HPP
#define QSCAT_TABLE_HPP

// CSV output: comma separated, '.' decimal point, LF line endings, mandatory
// header, no quoting. Numbers use the shortest %g form with at least 12
// significant digits that parses back to the same double. Failed cells hold
// ERR:<code>.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "qscat/core.hpp"
#include "qscat/sweep.hpp"

namespace qscat {

inline std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  for (int prec = 12; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

inline std::string error_cell(ErrorCode code) { return "ERR:" + std::string(to_string(code)); }

struct OutputTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void validate() const {
    std::set<std::string> seen(header.begin(), header.end());
    if (seen.size() != header.size()) throw ScatterError(ErrorCode::invalid_input, "table: duplicate column name");
    for (const auto& r : rows)
      if (r.size() != header.size()) throw ScatterError(ErrorCode::invalid_input, "table: ragged row");
  }

  std::string to_csv() const {
    validate();
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
      }
      out += '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
  }
};

/// Columns: var, per-method T (and R for exact), Eckart's published R when
/// applicable, bound_gap, defect.
inline OutputTable sweep_table(const SweepSpec& spec, const std::vector<SweepRow>& rows,
                               const std::string& var_column = "var") {
  const bool exact = spec.has(Method::exact);
  const bool eckart = exact && std::holds_alternative<Eckart>(spec.potential);
  const bool gap_col = exact && spec.has(Method::bound);

  OutputTable t;
  t.header.push_back(var_column);
  for (Method m : spec.methods) {
    t.header.push_back(to_string(m) + "_T");
    if (m == Method::exact) t.header.push_back("exact_R");
  }
  if (eckart) t.header.push_back("exact_R_published");
  if (gap_col) t.header.push_back("bound_gap");
  if (exact) t.header.push_back("defect");

  for (const auto& row : rows) {
    std::vector<std::string> cells;
    cells.push_back(format_number(row.variable_value));
    std::optional<ErrorCode> exact_error;
    for (Method m : spec.methods) {
      const MethodEntry& e = row.entries.at(m);
      if (m == Method::exact) exact_error = e.error;
      if (e.error) {
        cells.push_back(error_cell(*e.error));
        if (m == Method::exact) cells.push_back(error_cell(*e.error));
        continue;
      }
      cells.push_back(format_number(*e.transmission));
      if (m == Method::exact) cells.push_back(format_number(*e.reflection));
    }
    if (eckart) {
      if (row.eckart_r_published)
        cells.push_back(format_number(*row.eckart_r_published));
      else
        cells.push_back(error_cell(row.eckart_r_published_error.value_or(exact_error.value_or(ErrorCode::invalid_input))));
    }
    if (gap_col) {
      if (row.bound_gap)
        cells.push_back(format_number(*row.bound_gap));
      else if (exact_error)
        cells.push_back(error_cell(*exact_error));
      else
        cells.push_back(error_cell(*row.entries.at(Method::bound).error));
    }
    if (exact) cells.push_back(row.defect ? format_number(*row.defect) : error_cell(*exact_error));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

/// Split one CSV line on commas.
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace qscat

#endif  // QSCAT_TABLE_HPP
