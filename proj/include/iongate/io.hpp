#pragma once

#include <map>
#include <string>
#include <vector>

#include "iongate/coupling.hpp"
#include "iongate/gate.hpp"

namespace iongate {

/// Frequency grammar: `2pi*10MHz`, `10MHz`, or raw rad/s. The `2pi*` prefix
/// marks ordinary-frequency input; bare unit suffixes follow the rad/s
/// convention (a value printed "10 MHz" is 1e7 rad/s).
double parse_frequency(const std::string& text);

/// Lengths: `103um`, `10mm`, `5.44nm`, `1.2e-4` (raw meters).
double parse_length(const std::string& text);

struct SweepRange {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  bool log_spacing = false;

  std::vector<double> values() const;
};

/// `50um:500um:25:log` or `1e-5:5e-4:25:linear` (lengths via parse_length).
SweepRange parse_sweep_range(const std::string& text);

/// Plain `key = value` config file; `#` starts a comment.
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Applies `species.<name>.mass_u`, `.charge_e`, `.E0` keys to the registry.
void apply_species_overrides(const std::map<std::string, std::string>& config,
                             SpeciesRegistry& registry);

struct SweepRow {
  std::string species;
  double omega_xy, omega_z, omega_perp, L, alpha;
  double J_over_hbar, U_over_hbar;  // rad/s
  double A;
  std::string method;
};

std::string sweep_csv_header();
std::string to_csv_line(const SweepRow& row);
SweepRow parse_csv_line(const std::string& line);

/// Gnuplot script plotting J vs L on log-log axes from the CSV.
std::string gnuplot_script(const std::string& csv_path);

/// Gate matrix as JSON nested arrays of (re, im) pairs plus scalar fields.
std::string gate_to_json(const GateSpec& gate);

}  // namespace iongate
