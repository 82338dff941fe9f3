#include "iongate/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "iongate/constants.hpp"
#include "iongate/errors.hpp"

namespace iongate {

namespace {

// number with optional suffix from a unit table
double parse_with_units(const std::string& text,
                        const std::vector<std::pair<std::string, double>>& units,
                        const char* what) {
  std::size_t pos = 0;
  double value;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + what + ": '" + text + "'");
  }
  std::string suffix = text.substr(pos);
  while (!suffix.empty() && suffix.front() == ' ') suffix.erase(0, 1);
  if (suffix.empty()) return value;
  for (const auto& [name, mult] : units) {
    if (suffix == name) return value * mult;
  }
  throw UsageError(std::string("unknown ") + what + " unit '" + suffix +
                   "' in '" + text + "'");
}

}  // namespace

double parse_frequency(const std::string& text) {
  std::string body = text;
  double mult = 1.0;
  if (body.rfind("2pi*", 0) == 0) {
    mult = constants::two_pi;
    body = body.substr(4);
  }
  static const std::vector<std::pair<std::string, double>> units = {
      {"Hz", 1.0},    {"hz", 1.0},    {"kHz", 1e3}, {"khz", 1e3},
      {"MHz", 1e6},   {"mhz", 1e6},   {"GHz", 1e9}, {"ghz", 1e9},
      {"THz", 1e12},  {"thz", 1e12}};
  return mult * parse_with_units(body, units, "frequency");
}

double parse_length(const std::string& text) {
  static const std::vector<std::pair<std::string, double>> units = {
      {"m", 1.0},   {"cm", 1e-2}, {"mm", 1e-3},  {"um", 1e-6},
      {"µm", 1e-6}, {"nm", 1e-9}, {"pm", 1e-12}};
  return parse_with_units(text, units, "length");
}

std::vector<double> SweepRange::values() const {
  std::vector<double> v;
  v.reserve(points);
  for (int i = 0; i < points; ++i) {
    const double s = static_cast<double>(i) / (points - 1);
    v.push_back(log_spacing ? min * std::pow(max / min, s)
                            : min + (max - min) * s);
  }
  return v;
}

SweepRange parse_sweep_range(const std::string& text) {
  std::vector<std::string> parts;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ':')) parts.push_back(tok);
  if (parts.size() != 4) {
    throw UsageError("sweep range must be min:max:points:log|linear, got '" +
                     text + "'");
  }
  SweepRange r;
  r.min = parse_length(parts[0]);
  r.max = parse_length(parts[1]);
  r.points = std::stoi(parts[2]);
  if (parts[3] == "log") r.log_spacing = true;
  else if (parts[3] == "linear") r.log_spacing = false;
  else throw UsageError("sweep spacing must be 'log' or 'linear'");
  if (r.points < 2) throw UsageError("sweep needs at least 2 points");
  if (!(r.min < r.max)) throw UsageError("sweep requires min < max");
  if (r.log_spacing && r.min <= 0.0) {
    throw UsageError("log sweep requires min > 0");
  }
  return r;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> config;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!key.empty()) config[key] = value;
  }
  return config;
}

void apply_species_overrides(const std::map<std::string, std::string>& config,
                             SpeciesRegistry& registry) {
  // collect species.<name>.<field> keys
  std::map<std::string, IonSpecies> pending;
  for (const auto& [key, value] : config) {
    if (key.rfind("species.", 0) != 0) continue;
    const auto rest = key.substr(8);
    const auto dot = rest.rfind('.');
    if (dot == std::string::npos) {
      throw UsageError("malformed species key '" + key + "'");
    }
    const std::string name = rest.substr(0, dot);
    const std::string field = rest.substr(dot + 1);
    auto& sp = pending[name];
    sp.name = name;
    if (field == "mass_u") {
      sp.mass = std::stod(value) * constants::atomic_mass_unit;
    } else if (field == "mass_kg") {
      sp.mass = std::stod(value);
    } else if (field == "charge_e") {
      sp.charge = std::stod(value) * constants::elementary_charge;
    } else if (field == "E0") {  // frequency grammar, stored as energy
      sp.hyperfine_splitting_E0 = constants::hbar * parse_frequency(value);
    } else {
      throw UsageError("unknown species field '" + field + "' in '" + key + "'");
    }
  }
  for (auto& [name, sp] : pending) {
    if (sp.charge == 0.0) sp.charge = constants::elementary_charge;
    registry.add(sp);
  }
}

std::string sweep_csv_header() {
  return "species,omega_xy,omega_z,omega_perp,L,alpha,J_over_hbar,U_over_hbar,"
         "A,method";
}

std::string to_csv_line(const SweepRow& row) {
  std::ostringstream out;
  out.precision(12);
  out << row.species << ',' << row.omega_xy << ',' << row.omega_z << ','
      << row.omega_perp << ',' << row.L << ',' << row.alpha << ','
      << row.J_over_hbar << ',' << row.U_over_hbar << ',' << row.A << ','
      << row.method;
  return out.str();
}

SweepRow parse_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (cells.size() != 10) throw Error("malformed CSV row: " + line);
  SweepRow row;
  row.species = cells[0];
  row.omega_xy = std::stod(cells[1]);
  row.omega_z = std::stod(cells[2]);
  row.omega_perp = std::stod(cells[3]);
  row.L = std::stod(cells[4]);
  row.alpha = std::stod(cells[5]);
  row.J_over_hbar = std::stod(cells[6]);
  row.U_over_hbar = std::stod(cells[7]);
  row.A = std::stod(cells[8]);
  row.method = cells[9];
  return row;
}

std::string gnuplot_script(const std::string& csv_path) {
  std::ostringstream out;
  out << "set datafile separator ','\n"
      << "set logscale xy\n"
      << "set xlabel 'L [m]'\n"
      << "set ylabel 'J/hbar [rad/s]'\n"
      << "set grid\n"
      << "plot '" << csv_path
      << "' every ::1 using 5:7 with linespoints title 'J vs L'\n";
  return out.str();
}

std::string gate_to_json(const GateSpec& gate) {
  nlohmann::json j;
  j["t_g"] = gate.t_g;
  j["theta"] = gate.theta;
  j["theta_combined"] = gate.theta_combined;
  if (std::isfinite(gate.n_collisions)) j["n_collisions"] = gate.n_collisions;
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 4; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 4; ++c) {
      row.push_back({gate.matrix(r, c).real(), gate.matrix(r, c).imag()});
    }
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j.dump(2);
}

}  // namespace iongate
