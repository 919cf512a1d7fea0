#pragma once

// CSV output for sweep tables.
//
// Columns: setting_id, alpha, gamma, beta, kappa, gt, then the table's
// quantity columns. Numbers use 12 significant digits in the C locale,
// comma separated, one '\n'-terminated line per row.

#include <iosfwd>
#include <string>

#include "trijc/sweep.hpp"

namespace trijc {

// Shortest "%.12g"-equivalent rendering, independent of the global locale.
std::string format_number(double v);

// Returns the number of bytes written. Throws std::invalid_argument on an
// empty table and std::runtime_error when the stream fails.
std::size_t emit_csv(const ResultTable& table, std::ostream& out);

// Writes a standalone matplotlib script that plots every quantity column of
// the CSV at `csv_path` against gt, one curve per setting.
void emit_plot_script(const ResultTable& table, const std::string& csv_path,
                      std::ostream& out);

}  // namespace trijc
