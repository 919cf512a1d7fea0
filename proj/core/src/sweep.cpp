#include "trijc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "trijc/dynamics.hpp"
#include "trijc/entanglement.hpp"
#include "trijc/errors.hpp"
#include "trijc/gme.hpp"

namespace trijc {

namespace {

const PartyList kAtoms = {Party::A, Party::B, Party::C};

std::string row_label(std::size_t row, int setting, double gt) {
  std::ostringstream os;
  os.precision(12);
  os << "sweep row " << row << " (setting " << setting << ", gt = " << gt << "): ";
  return os.str();
}

}  // namespace

std::size_t ResultTable::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column named " + name);
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<std::string> columns_for(Quantity q) {
  if (q != Quantity::Elements) return {std::string(to_string(q))};
  std::vector<std::string> cols;
  for (const auto& [i, j] : kTrackedElements) {
    const std::string name = "rho" + std::to_string(i) + std::to_string(j);
    cols.push_back("re_" + name);
    cols.push_back("im_" + name);
  }
  return cols;
}

std::vector<double> evaluate_quantities(const DensityMatrix& rho_abc,
                                        const std::vector<Quantity>& outputs,
                                        const sdp::SdpOptions& sdp_options) {
  std::vector<double> values;
  std::optional<CriteriaReport> criteria;
  auto crit = [&]() -> const CriteriaReport& {
    if (!criteria) criteria = biseparability_criteria(rho_abc);
    return *criteria;
  };
  auto pair_negativity = [&](Party a, Party b) {
    return negativity(partial_trace(rho_abc, {a, b}), {a}, {b});
  };

  for (Quantity q : outputs) {
    switch (q) {
      case Quantity::GmeAbc:
        values.push_back(ppt_mixture_measure(rho_abc, kAtoms, sdp_options).genuine_negativity);
        break;
      case Quantity::NegAb:
        values.push_back(pair_negativity(Party::A, Party::B));
        break;
      case Quantity::NegBc:
        values.push_back(pair_negativity(Party::B, Party::C));
        break;
      case Quantity::NegAc:
        values.push_back(pair_negativity(Party::A, Party::C));
        break;
      case Quantity::Crit13:
        values.push_back(crit().ghz.margin());
        break;
      case Quantity::Crit14:
        values.push_back(crit().w.margin());
        break;
      case Quantity::Crit15:
        values.push_back(crit().fullsep.margin());
        break;
      case Quantity::Elements:
        for (const auto& t : crit().tracked) {
          values.push_back(t.value.real());
          values.push_back(t.value.imag());
        }
        break;
      case Quantity::BCoherence:
        values.push_back(b_block_coherence(rho_abc));
        break;
    }
  }
  return values;
}

ResultTable run_sweep(const SweepSpec& spec, const SweepOptions& options) {
  spec.validate();
  const std::vector<JCConfig> settings = spec.settings();
  const std::vector<double> grid = spec.grid.points();

  ResultTable table;
  for (Quantity q : spec.outputs) {
    for (auto& c : columns_for(q)) table.columns.push_back(std::move(c));
  }

  std::vector<DensityMatrix> initial;
  initial.reserve(settings.size());
  for (const auto& cfg : settings) initial.push_back(assemble_initial(cfg));

  const std::size_t n_gt = grid.size();
  table.rows.resize(settings.size() * n_gt);

  // Work items are gt points: the global unitary is built once per gt and
  // shared by every setting.
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::size_t first_error_row = table.rows.size();

  auto worker = [&]() {
    for (std::size_t g = next++; g < n_gt; g = next++) {
      std::size_t row_idx = g;
      try {
        const ComplexMatrix u = global_unitary(grid[g], spec.base.fock_dim);
        for (std::size_t s = 0; s < settings.size(); ++s) {
          row_idx = s * n_gt + g;
          const DensityMatrix rho = evolve(initial[s], u);
          const DensityMatrix rho_abc = reduce(rho, kAtoms);
          ResultRow& row = table.rows[row_idx];
          row.setting_id = static_cast<int>(s);
          row.cfg = settings[s];
          row.cfg.gt = grid[g];
          row.values = evaluate_quantities(rho_abc, spec.outputs, options.sdp);
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (row_idx < first_error_row) {
          first_error_row = row_idx;
          first_error = std::current_exception();
        }
      }
    }
  };

  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (first_error) {
    const std::size_t s = first_error_row / n_gt;
    const std::string prefix =
        row_label(first_error_row, static_cast<int>(s), grid[first_error_row % n_gt]);
    try {
      std::rethrow_exception(first_error);
    } catch (const NumericalError& e) {
      throw NumericalError(prefix + e.what());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(prefix + e.what());
    } catch (const std::exception& e) {
      throw std::runtime_error(prefix + e.what());
    }
  }
  return table;
}

std::string_view to_string(Preset p) {
  switch (p) {
    case Preset::Fig2: return "fig2";
    case Preset::Fig3: return "fig3";
    case Preset::Classical: return "classical";
    case Preset::QCorr: return "qcorr";
  }
  return "?";
}

SweepSpec preset_spec(Preset p) {
  SweepSpec spec;
  spec.base.beta = kInvSqrt2;
  spec.base.kappa = kInvSqrt2;
  switch (p) {
    case Preset::Fig2:
      spec.varied = {{"alpha", {0.95, 0.92, 0.90}}, {"gamma", {0.95, 0.92, 0.90}}};
      spec.outputs = {Quantity::GmeAbc};
      break;
    case Preset::Fig3:
      spec.varied = {{"alpha", {0.95, 0.92, 0.90}}, {"gamma", {0.95, 0.92, 0.90}}};
      spec.outputs = {Quantity::NegBc, Quantity::NegAc, Quantity::NegAb};
      break;
    case Preset::Classical:
      spec.base.alpha = 0.0;
      spec.base.gamma = 0.0;
      spec.outputs = {Quantity::GmeAbc, Quantity::NegAb,  Quantity::NegBc,
                      Quantity::NegAc,  Quantity::Crit13, Quantity::Crit14,
                      Quantity::Crit15, Quantity::BCoherence, Quantity::Elements};
      break;
    case Preset::QCorr:
      spec.varied = {{"alpha", {0.1, 0.2, 0.3}}, {"gamma", {0.1, 0.2, 0.3}}};
      spec.outputs = {Quantity::GmeAbc, Quantity::NegAb, Quantity::NegBc, Quantity::NegAc,
                      Quantity::Crit13, Quantity::Crit14, Quantity::Crit15};
      break;
  }
  return spec;
}

}  // namespace trijc
