#pragma once

// Parameter sweeps over gt and the canned studies built on them.

#include <iosfwd>
#include <string>
#include <vector>

#include "trijc/config.hpp"
#include "trijc/sdp.hpp"

namespace trijc {

struct ResultRow {
  int setting_id = 0;
  JCConfig cfg;  // includes gt
  std::vector<double> values;  // one per ResultTable::columns entry
};

struct ResultTable {
  std::vector<std::string> columns;  // quantity columns, after the fixed ones
  std::vector<ResultRow> rows;       // ordered by (setting_id, gt)

  // Index of a quantity column; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
};

// Column names a quantity expands to. Elements become re_/im_ pairs.
std::vector<std::string> columns_for(Quantity q);

struct SweepOptions {
  int threads = 1;
  sdp::SdpOptions sdp;
};

// Row values for one atomic three-qubit state.
std::vector<double> evaluate_quantities(const DensityMatrix& rho_abc,
                                        const std::vector<Quantity>& outputs,
                                        const sdp::SdpOptions& sdp_options = {});

// Assemble, evolve, reduce and evaluate every (setting, gt) pair. A failing
// row aborts the sweep with an error naming the row; numerical failures stay
// NumericalError, invalid input stays std::invalid_argument.
ResultTable run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

enum class Preset { Fig2, Fig3, Classical, QCorr };

std::string_view to_string(Preset p);
SweepSpec preset_spec(Preset p);

}  // namespace trijc
