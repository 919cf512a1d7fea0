#pragma once

// Sweep specification and its plain-text configuration format.
//
// One `key = value` per line, `#` starts a comment, blank lines ignored.
//
//   alpha = 0.95            # base parameters
//   gamma = 0.95
//   beta = 0.7071067811865476
//   kappa = 0.7071067811865476
//   fock_dim = 3
//   gt_start = 0
//   gt_end = 6.283185307179586
//   gt_steps = 200
//   outputs = gme_abc, neg_bc, neg_ac
//   vary.alpha = 0.95, 0.92, 0.90   # settings are zipped across vary.* keys
//   vary.gamma = 0.95, 0.92, 0.90

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trijc/states.hpp"

namespace trijc {

enum class Quantity {
  GmeAbc,
  NegAb,
  NegBc,
  NegAc,
  Crit13,
  Crit14,
  Crit15,
  Elements,
  BCoherence,
};

std::string_view to_string(Quantity q);
std::optional<Quantity> quantity_from_string(std::string_view name);

struct GtGrid {
  double start = 0.0;
  double end = 2.0 * std::numbers::pi;
  int steps = 200;

  // `steps` evenly spaced points including both ends.
  std::vector<double> points() const;
};

struct VariedParameter {
  std::string name;  // alpha, gamma, beta or kappa
  std::vector<double> values;
};

struct SweepSpec {
  JCConfig base;
  GtGrid grid;
  std::vector<VariedParameter> varied;
  std::vector<Quantity> outputs = {Quantity::GmeAbc, Quantity::NegAb, Quantity::NegBc,
                                   Quantity::NegAc};

  // Throws ValidationError naming the offending key.
  void validate() const;

  // One JCConfig per setting: the i-th value of every varied parameter.
  std::vector<JCConfig> settings() const;
};

// Malformed input; the message carries the 1-based line number.
class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed input with an out-of-range or inconsistent value.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string key, const std::string& what)
      : std::invalid_argument(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

SweepSpec parse_config(std::string_view text);

// Sets a scalar parameter (alpha, gamma, beta, kappa) on `spec` and drops it
// from the varied list.
void override_parameter(SweepSpec& spec, const std::string& name, double value);

}  // namespace trijc
