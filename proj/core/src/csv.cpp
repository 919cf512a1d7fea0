#include "trijc/csv.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace trijc {

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  if (ec != std::errc()) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, ptr);
}

std::size_t emit_csv(const ResultTable& table, std::ostream& out) {
  if (table.rows.empty()) throw std::invalid_argument("emit_csv: empty table");

  std::string text = "setting_id,alpha,gamma,beta,kappa,gt";
  for (const auto& c : table.columns) {
    text += ',';
    text += c;
  }
  text += '\n';

  for (const auto& row : table.rows) {
    if (row.values.size() != table.columns.size()) {
      throw std::invalid_argument("emit_csv: row width does not match header");
    }
    text += std::to_string(row.setting_id);
    for (double v : {row.cfg.alpha, row.cfg.gamma, row.cfg.beta, row.cfg.kappa, row.cfg.gt}) {
      text += ',';
      text += format_number(v);
    }
    for (double v : row.values) {
      text += ',';
      text += format_number(v);
    }
    text += '\n';
  }

  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw std::runtime_error("emit_csv: write failed");
  return text.size();
}

void emit_plot_script(const ResultTable& table, const std::string& csv_path,
                      std::ostream& out) {
  out << "#!/usr/bin/env python3\n"
         "import csv\n"
         "import sys\n"
         "from collections import defaultdict\n\n"
         "import matplotlib\n"
         "matplotlib.use(\"Agg\")\n"
         "import matplotlib.pyplot as plt\n\n"
      << "CSV_PATH = sys.argv[1] if len(sys.argv) > 1 else \"" << csv_path << "\"\n"
      << "COLUMNS = [";
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    out << (k ? ", " : "") << '"' << table.columns[k] << '"';
  }
  out << "]\n\n"
         "curves = defaultdict(lambda: defaultdict(list))\n"
         "labels = {}\n"
         "with open(CSV_PATH, newline=\"\") as fh:\n"
         "    for row in csv.DictReader(fh):\n"
         "        sid = int(row[\"setting_id\"])\n"
         "        labels[sid] = \"alpha={alpha} gamma={gamma}\".format(**row)\n"
         "        curves[sid][\"gt\"].append(float(row[\"gt\"]))\n"
         "        for col in COLUMNS:\n"
         "            curves[sid][col].append(float(row[col]))\n\n"
         "for col in COLUMNS:\n"
         "    fig, ax = plt.subplots(figsize=(6, 4))\n"
         "    for sid in sorted(curves):\n"
         "        ax.plot(curves[sid][\"gt\"], curves[sid][col], label=labels[sid])\n"
         "    ax.set_xlabel(\"g t\")\n"
         "    ax.set_ylabel(col)\n"
         "    ax.legend()\n"
         "    fig.tight_layout()\n"
         "    fig.savefig(CSV_PATH.rsplit(\".\", 1)[0] + \"_\" + col + \".png\", dpi=150)\n";
  if (!out) throw std::runtime_error("emit_plot_script: write failed");
}

}  // namespace trijc
