// iongate: collision-induced spin-spin coupling between trapped ions,
// two-qubit gate synthesis, design-point search and merge/split scheduling.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "iongate/constants.hpp"
#include "iongate/coupling.hpp"
#include "iongate/drive.hpp"
#include "iongate/errors.hpp"
#include "iongate/gate.hpp"
#include "iongate/io.hpp"
#include "iongate/schedule.hpp"

namespace {

using namespace iongate;
using constants::hbar;
using constants::two_pi;

std::string resolve_output(const std::string& path) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  if (const char* dir = std::getenv("IONGATE_OUTPUT_DIR")) {
    return (std::filesystem::path(dir) / p).string();
  }
  return path;
}

void print_freq(std::ostream& out, const std::string& label, double rad_s) {
  out.precision(12);
  out << label << rad_s << " rad/s  (" << rad_s / two_pi << " Hz)\n";
}

void print_coupling(const TrapConfig& cfg, const CouplingResult& res) {
  std::cout.precision(12);
  std::cout << "species      " << cfg.species.name << "\n";
  print_freq(std::cout, "omega_xy     ", cfg.omega_xy);
  print_freq(std::cout, "omega_z      ", cfg.omega_z);
  std::cout << "omega_perp   " << cfg.omega_perp() << "\n"
            << "L            " << cfg.L << " m\n"
            << "z0           " << cfg.z0() << " m\n"
            << "alpha        " << alpha(cfg) << "  ["
            << to_string(collision_regime(alpha(cfg))) << "]\n";
  print_freq(std::cout, "J/hbar       ", res.exchange_J / hbar);
  print_freq(std::cout, "U/hbar       ", res.direct_U / hbar);
  std::cout << "A            " << res.interference_A << "\n"
            << "method       " << to_string(res.method) << "\n";
  const auto it = interaction_time_estimate(cfg);
  std::cout << "validity     " << it.validity_ratio
            << (it.perturbative_valid ? "  (perturbative treatment valid)"
                                      : "  (perturbative treatment weak)")
            << "\n";
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
}

struct CommonArgs {
  std::string config_path;
  std::string species_name = "Yb-171";
  std::string omega_xy_text;
  std::string omega_z_text;
  std::string omega_perp_text;
  std::string L_text;

  SpeciesRegistry registry;

  void load_config() {
    if (config_path.empty()) return;
    const auto cfg = parse_config_file(config_path);
    apply_species_overrides(cfg, registry);
  }

  TrapConfig trap() const {
    TrapConfig cfg;
    cfg.species = registry.lookup(species_name);
    if (omega_xy_text.empty()) throw UsageError("--omega-xy is required");
    cfg.omega_xy = parse_frequency(omega_xy_text);
    if (!omega_z_text.empty()) {
      cfg.omega_z = parse_frequency(omega_z_text);
    } else if (!omega_perp_text.empty()) {
      cfg.omega_z = cfg.omega_xy / std::stod(omega_perp_text);
    } else {
      throw UsageError("one of --omega-z / --omega-perp is required");
    }
    if (L_text.empty()) throw UsageError("--L is required");
    cfg.L = parse_length(L_text);
    return cfg;
  }
};

CouplingResult run_method(const TrapConfig& cfg, const std::string& method,
                          double rel_tol) {
  const double a = alpha(cfg);
  if (a < 0.1) {
    if (method == "quadrature" || method == "auto") {
      std::cerr << "notice: alpha = " << a
                << " < 0.1 (classical-blocked regime); switching to the "
                   "classical direct-interaction model\n";
    }
    if (method != "asymptotic") return classical_direct_interaction(cfg);
  }
  if (method == "quadrature") {
    QuadratureSettings s;
    s.rel_tol = rel_tol;
    return level_shifts_quadrature(cfg, s);
  }
  if (method == "classical") return classical_direct_interaction(cfg);
  if (method == "asymptotic" || method == "auto") {
    return coupling_asymptotic(cfg);
  }
  throw UsageError("unknown method '" + method + "'");
}

int run(int argc, char** argv) {
  CLI::App app{
      "Collision-induced spin-spin coupling and two-qubit gate toolkit for "
      "linear ion-trap arrays"};
  app.require_subcommand(1);

  CommonArgs args;
  app.add_option("--config", args.config_path, "key = value config file");

  // --- species ---
  auto* sp_cmd = app.add_subcommand("species", "show a registered species");
  std::string sp_name = "Yb-171";
  sp_cmd->add_option("--name", sp_name, "species name");

  // --- coupling ---
  auto* cp_cmd =
      app.add_subcommand("coupling", "compute J, U, alpha, A for one point");
  std::string method = "auto";
  double rel_tol = 1e-9;
  cp_cmd->add_option("--species", args.species_name);
  cp_cmd->add_option("--omega-xy", args.omega_xy_text,
                     "transverse frequency (2pi*10MHz, 10MHz, or rad/s)");
  cp_cmd->add_option("--omega-z", args.omega_z_text);
  cp_cmd->add_option("--omega-perp", args.omega_perp_text);
  cp_cmd->add_option("--L", args.L_text, "trapping distance (e.g. 103um)");
  cp_cmd->add_option("--method", method,
                     "auto|quadrature|asymptotic|classical");
  cp_cmd->add_option("--rel-tol", rel_tol);

  // --- design ---
  auto* ds_cmd = app.add_subcommand(
      "design", "alpha = 1 design point maximizing J at fixed omega_xy");
  ds_cmd->add_option("--species", args.species_name);
  ds_cmd->add_option("--omega-xy", args.omega_xy_text)->required();
  ds_cmd->add_option("--omega-perp", args.omega_perp_text,
                     "confinement parameter target");
  ds_cmd->add_option("--L", args.L_text,
                     "alternatively: fix L, solve the alpha = 1 omega_perp");

  // --- sweep ---
  auto* sw_cmd = app.add_subcommand("sweep", "sweep L, export CSV + plot script");
  std::string sweep_text, output_path;
  sw_cmd->add_option("--species", args.species_name);
  sw_cmd->add_option("--omega-xy", args.omega_xy_text)->required();
  sw_cmd->add_option("--omega-z", args.omega_z_text);
  sw_cmd->add_option("--omega-perp", args.omega_perp_text);
  sw_cmd->add_option("--L", sweep_text, "min:max:points:log|linear")->required();
  sw_cmd->add_option("--method", method);
  sw_cmd->add_option("--rel-tol", rel_tol);
  sw_cmd->add_option("--output", output_path, "CSV path")->required();

  // --- gate ---
  auto* gt_cmd = app.add_subcommand("gate", "synthesize the collision gate");
  std::string E0_text = "0", U_text = "0", J_text, format = "table";
  gt_cmd->add_option("--J", J_text, "exchange coupling J/hbar (freq grammar)")
      ->required();
  gt_cmd->add_option("--E0", E0_text, "hyperfine splitting E0/hbar");
  gt_cmd->add_option("--U", U_text, "direct shift U/hbar");
  gt_cmd->add_option("--omega-z", args.omega_z_text, "for collision count");
  gt_cmd->add_option("--format", format, "table|json");
  gt_cmd->add_option("--output", output_path);

  // --- schedule ---
  auto* sc_cmd =
      app.add_subcommand("schedule", "compile a remote two-qubit gate");
  int n_traps = 2;
  std::string from_q, to_q, tg_text;
  sc_cmd->add_option("--n-traps", n_traps)->required();
  sc_cmd->add_option("--from", from_q, "qubit label, e.g. q0")->required();
  sc_cmd->add_option("--to", to_q)->required();
  sc_cmd->add_option("--tg", tg_text, "gate time in s")->required();
  sc_cmd->add_option("--omega-z", args.omega_z_text)->required();
  sc_cmd->add_option("--L", args.L_text, "trap length");
  sc_cmd->add_option("--output", output_path);

  // --- validate ---
  auto* vl_cmd = app.add_subcommand("validate", "check a schedule file");
  std::string input_path;
  vl_cmd->add_option("--n-traps", n_traps)->required();
  vl_cmd->add_option("--input", input_path, "schedule text file")->required();
  vl_cmd->add_option("--omega-z", args.omega_z_text);
  vl_cmd->add_option("--L", args.L_text, "trap length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  args.load_config();

  if (sp_cmd->parsed()) {
    const auto& sp = args.registry.lookup(sp_name);
    std::cout.precision(12);
    std::cout << "name    " << sp.name << "\n"
              << "mass    " << sp.mass << " kg\n"
              << "charge  " << sp.charge << " C\n";
    if (sp.hyperfine_splitting_E0) {
      print_freq(std::cout, "E0/hbar ", *sp.hyperfine_splitting_E0 / hbar);
    } else {
      std::cout << "E0/hbar (none: qubit is a real spin)\n";
    }
    return 0;
  }

  if (cp_cmd->parsed()) {
    const auto cfg = args.trap();
    print_coupling(cfg, run_method(cfg, method, rel_tol));
    return 0;
  }

  if (ds_cmd->parsed()) {
    const auto& sp = args.registry.lookup(args.species_name);
    const double omega_xy = parse_frequency(args.omega_xy_text);
    TrapConfig cfg;
    if (!args.omega_perp_text.empty()) {
      cfg = design_point_alpha1(sp, omega_xy, std::stod(args.omega_perp_text));
    } else if (!args.L_text.empty()) {
      const double L = parse_length(args.L_text);
      cfg = design_point_alpha1(
          sp, omega_xy, omega_perp_for_alpha1(sp, omega_xy, L));
    } else {
      throw UsageError("design needs --omega-perp or --L");
    }
    const auto res = coupling_asymptotic(cfg);
    print_coupling(cfg, res);
    print_freq(std::cout, "wperp*J/hbar ",
               restriction_product(sp, omega_xy) / hbar);
    const auto gate = synthesize_gate(
        sp.hyperfine_splitting_E0.value_or(0.0), res.direct_U, res.exchange_J,
        cfg.omega_z);
    std::cout << "t_g          " << gate.t_g << " s\n"
              << "N_g          " << gate.n_collisions << "\n";
    return 0;
  }

  if (sw_cmd->parsed()) {
    const auto& sp = args.registry.lookup(args.species_name);
    const double omega_xy = parse_frequency(args.omega_xy_text);
    double omega_z;
    if (!args.omega_z_text.empty()) omega_z = parse_frequency(args.omega_z_text);
    else if (!args.omega_perp_text.empty())
      omega_z = omega_xy / std::stod(args.omega_perp_text);
    else throw UsageError("one of --omega-z / --omega-perp is required");

    const auto range = parse_sweep_range(sweep_text);
    const std::string csv_path = resolve_output(output_path);
    std::ofstream csv(csv_path);
    if (!csv) throw UsageError("cannot write '" + csv_path + "'");
    csv << sweep_csv_header() << "\n";
    for (const double L : range.values()) {
      TrapConfig cfg{sp, omega_z, omega_xy, L};
      const auto res = run_method(cfg, method, rel_tol);
      SweepRow row{sp.name,  cfg.omega_xy,         cfg.omega_z,
                   cfg.omega_perp(), L,            alpha(cfg),
                   res.exchange_J / hbar,          res.direct_U / hbar,
                   res.interference_A,             to_string(res.method)};
      csv << to_csv_line(row) << "\n";
    }
    std::ofstream plot(csv_path + ".gp");
    plot << gnuplot_script(csv_path);
    std::cout << "wrote " << csv_path << " and " << csv_path << ".gp\n";
    return 0;
  }

  if (gt_cmd->parsed()) {
    const double E0 = hbar * (E0_text == "0" ? 0.0 : parse_frequency(E0_text));
    const double U = hbar * (U_text == "0" ? 0.0 : parse_frequency(U_text));
    const double J = hbar * parse_frequency(J_text);
    const double omega_z =
        args.omega_z_text.empty() ? 0.0 : parse_frequency(args.omega_z_text);
    const auto gate = synthesize_gate(E0, U, J, omega_z);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output_path.empty()) {
      file.open(resolve_output(output_path));
      if (!file) throw UsageError("cannot write '" + output_path + "'");
      out = &file;
    }
    if (format == "json") {
      *out << gate_to_json(gate) << "\n";
    } else {
      out->precision(12);
      *out << "t_g          " << gate.t_g << " s\n"
           << "theta        " << gate.theta << " rad (matrix matching)\n"
           << "theta_combined  " << gate.theta_combined << " rad\n";
      if (omega_z > 0.0) {
        const auto cc = collision_count(J, omega_z, false);
        *out << "N_g          " << cc.count << "  (nearest " << cc.nearest
             << ", mistuning " << cc.mistuning << ")\n";
      }
      *out << "matrix (re, im):\n";
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          *out << "  (" << gate.matrix(r, c).real() << ", "
               << gate.matrix(r, c).imag() << ")";
        }
        *out << "\n";
      }
    }
    return 0;
  }

  if (sc_cmd->parsed()) {
    const double tg = std::stod(tg_text);
    const double omega_z = parse_frequency(args.omega_z_text);
    const double L = args.L_text.empty() ? 1e-4 : parse_length(args.L_text);
    const auto array = make_trap_array(n_traps, L);
    const auto sched = route_remote_gate(array, from_q, to_q, tg, omega_z);
    const std::string text = format_schedule(sched);
    if (!output_path.empty()) {
      std::ofstream file(resolve_output(output_path));
      if (!file) throw UsageError("cannot write '" + output_path + "'");
      file << text;
    } else {
      std::cout << text;
    }
    std::cerr << "total time: " << sched.total_time << " s\n";
    return 0;
  }

  if (vl_cmd->parsed()) {
    std::ifstream in(input_path);
    if (!in) throw UsageError("cannot open '" + input_path + "'");
    const auto sched = parse_schedule(in);
    const double L = args.L_text.empty() ? 1e-4 : parse_length(args.L_text);
    const double omega_z =
        args.omega_z_text.empty() ? 0.0 : parse_frequency(args.omega_z_text);
    const auto array = make_trap_array(n_traps, L);
    const auto report = validate_schedule(array, sched, omega_z);
    if (report.valid()) {
      std::cout << "valid\n";
      return 0;
    }
    for (const auto& v : report.violations) std::cout << v << "\n";
    return 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const iongate::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const iongate::UnknownSpeciesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const iongate::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
