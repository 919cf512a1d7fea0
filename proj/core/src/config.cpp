#include "trijc/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <utility>

namespace trijc {

namespace {

constexpr std::array<std::pair<Quantity, std::string_view>, 9> kQuantityNames = {{
    {Quantity::GmeAbc, "gme_abc"},
    {Quantity::NegAb, "neg_ab"},
    {Quantity::NegBc, "neg_bc"},
    {Quantity::NegAc, "neg_ac"},
    {Quantity::Crit13, "crit13"},
    {Quantity::Crit14, "crit14"},
    {Quantity::Crit15, "crit15"},
    {Quantity::Elements, "elements"},
    {Quantity::BCoherence, "b_coherence"},
}};

constexpr std::array<std::string_view, 4> kParameters = {"alpha", "gamma", "beta", "kappa"};

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

double parse_real(std::string_view s, int line, std::string_view key) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw ParseError(line, "invalid number '" + std::string(s) + "' for " + std::string(key));
  }
  return v;
}

int parse_int(std::string_view s, int line, std::string_view key) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line, "invalid integer '" + std::string(s) + "' for " + std::string(key));
  }
  return v;
}

bool is_parameter(std::string_view name) {
  return std::find(kParameters.begin(), kParameters.end(), name) != kParameters.end();
}

double& parameter_ref(JCConfig& cfg, std::string_view name) {
  if (name == "alpha") return cfg.alpha;
  if (name == "gamma") return cfg.gamma;
  if (name == "beta") return cfg.beta;
  if (name == "kappa") return cfg.kappa;
  throw ValidationError(std::string(name), "unknown parameter");
}

void check_unit(const std::string& key, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ValidationError(key, "value " + std::to_string(v) + " is outside [0, 1]");
  }
}

}  // namespace

std::string_view to_string(Quantity q) {
  for (const auto& [k, name] : kQuantityNames) {
    if (k == q) return name;
  }
  return "?";
}

std::optional<Quantity> quantity_from_string(std::string_view name) {
  for (const auto& [k, n] : kQuantityNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<double> GtGrid::points() const {
  std::vector<double> pts(static_cast<std::size_t>(std::max(steps, 0)));
  for (int i = 0; i < steps; ++i) {
    pts[static_cast<std::size_t>(i)] =
        i + 1 == steps ? end : start + (end - start) * i / (steps - 1);
  }
  return pts;
}

void SweepSpec::validate() const {
  check_unit("alpha", base.alpha);
  check_unit("gamma", base.gamma);
  check_unit("beta", base.beta);
  check_unit("kappa", base.kappa);
  if (base.fock_dim < 3) throw ValidationError("fock_dim", "must be at least 3");
  if (grid.steps < 2) throw ValidationError("gt_steps", "must be at least 2");
  if (!(grid.start < grid.end)) throw ValidationError("gt_end", "must exceed gt_start");
  if (outputs.empty()) throw ValidationError("outputs", "no quantities requested");

  std::size_t count = 0;
  for (std::size_t k = 0; k < varied.size(); ++k) {
    const auto& v = varied[k];
    const std::string key = "vary." + v.name;
    if (!is_parameter(v.name)) throw ValidationError(key, "unknown parameter");
    for (std::size_t j = 0; j < k; ++j) {
      if (varied[j].name == v.name) throw ValidationError(key, "given twice");
    }
    if (v.values.empty()) throw ValidationError(key, "empty value list");
    for (double x : v.values) check_unit(key, x);
    if (count != 0 && v.values.size() != count) {
      throw ValidationError(key, "value list length differs from other vary.* keys");
    }
    count = v.values.size();
  }
}

std::vector<JCConfig> SweepSpec::settings() const {
  std::size_t count = varied.empty() ? 1 : varied.front().values.size();
  std::vector<JCConfig> out(count, base);
  for (const auto& v : varied) {
    for (std::size_t i = 0; i < count; ++i) parameter_ref(out[i], v.name) = v.values[i];
  }
  return out;
}

SweepSpec parse_config(std::string_view text) {
  SweepSpec spec;
  std::vector<std::string> seen;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "missing key");
    if (value.empty()) throw ParseError(line_no, "missing value for " + key);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw ParseError(line_no, "duplicate key " + key);
    }
    seen.push_back(key);

    if (is_parameter(key)) {
      parameter_ref(spec.base, key) = parse_real(value, line_no, key);
    } else if (key == "fock_dim") {
      spec.base.fock_dim = parse_int(value, line_no, key);
    } else if (key == "gt_start") {
      spec.grid.start = parse_real(value, line_no, key);
    } else if (key == "gt_end") {
      spec.grid.end = parse_real(value, line_no, key);
    } else if (key == "gt_steps") {
      spec.grid.steps = parse_int(value, line_no, key);
    } else if (key == "outputs") {
      spec.outputs.clear();
      for (auto name : split_list(value)) {
        auto q = quantity_from_string(name);
        if (!q) throw ParseError(line_no, "unknown output '" + std::string(name) + "'");
        if (std::find(spec.outputs.begin(), spec.outputs.end(), *q) != spec.outputs.end()) {
          throw ParseError(line_no, "output '" + std::string(name) + "' listed twice");
        }
        spec.outputs.push_back(*q);
      }
    } else if (key.rfind("vary.", 0) == 0) {
      const std::string name = key.substr(5);
      if (!is_parameter(name)) throw ParseError(line_no, "cannot vary '" + name + "'");
      VariedParameter v{name, {}};
      for (auto item : split_list(value)) v.values.push_back(parse_real(item, line_no, key));
      spec.varied.push_back(std::move(v));
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }
  spec.validate();
  return spec;
}

void override_parameter(SweepSpec& spec, const std::string& name, double value) {
  parameter_ref(spec.base, name) = value;
  std::erase_if(spec.varied, [&](const VariedParameter& v) { return v.name == name; });
}

}  // namespace trijc
