#include "iongate/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

#include "iongate/constants.hpp"
#include "iongate/errors.hpp"

namespace iongate {

namespace {

int find_qubit(const TrapArray& array, const std::string& label) {
  for (int i = 0; i < array.n_traps; ++i) {
    if (array.occupancy[i] == label) return i;
  }
  throw ScheduleError("unknown qubit '" + label + "'");
}

double quantize_up(double t, double half_period) {
  return std::ceil(t / half_period - 1e-9) * half_period;
}

}  // namespace

TrapArray make_trap_array(int n_traps, double trap_length_L) {
  if (n_traps < 1) throw Error("array needs at least one trap");
  if (trap_length_L <= 0.0) throw Error("trap length must be > 0");
  TrapArray a;
  a.n_traps = n_traps;
  a.trap_length_L = trap_length_L;
  a.occupancy.reserve(n_traps);
  for (int i = 0; i < n_traps; ++i) a.occupancy.push_back("q" + std::to_string(i));
  return a;
}

const char* to_string(GateKind kind) {
  return kind == GateKind::sqrt_swap ? "sqrt_swap" : "swap";
}

MergeSchedule route_remote_gate(const TrapArray& array,
                                const std::string& qubit_a,
                                const std::string& qubit_b, double gate_time_tg,
                                double omega_z) {
  if (gate_time_tg <= 0.0) throw Error("gate time must be > 0");
  if (omega_z <= 0.0) throw Error("omega_z must be > 0");
  if (qubit_a == qubit_b) throw ScheduleError("same-trap request: a == b");
  int ia = find_qubit(array, qubit_a);
  int ib = find_qubit(array, qubit_b);
  if (ia > ib) std::swap(ia, ib);

  const double half_period = constants::pi / omega_z;
  const double hold_sqrt = quantize_up(gate_time_tg, half_period);
  const double hold_swap = quantize_up(2.0 * gate_time_tg, half_period);

  MergeSchedule sched;
  double t = 0.0;
  const auto emit = [&](int i, GateKind kind) {
    const double dur = kind == GateKind::swap ? hold_swap : hold_sqrt;
    sched.events.push_back(
        {ScheduleEvent::Type::merge, i, i + 1, t, t, kind});
    sched.events.push_back(
        {ScheduleEvent::Type::hold, i, i + 1, t, t + dur, kind});
    t += dur;
    sched.events.push_back(
        {ScheduleEvent::Type::split, i, i + 1, t, t, kind});
  };

  // move qubit_a's state next to qubit_b, interact, then undo the chain
  for (int k = ia; k <= ib - 2; ++k) emit(k, GateKind::swap);
  emit(ib - 1, GateKind::sqrt_swap);
  for (int k = ib - 2; k >= ia; --k) emit(k, GateKind::swap);

  sched.total_time = t;
  return sched;
}

ScheduleReport validate_schedule(const TrapArray& array,
                                 const MergeSchedule& schedule,
                                 double omega_z) {
  ScheduleReport report;
  auto violation = [&](const std::string& msg) {
    report.violations.push_back(msg);
  };

  std::vector<bool> merged(std::max(array.n_traps, 1), false);
  auto pair_tag = [](const ScheduleEvent& e) {
    return "(" + std::to_string(e.trap_i) + "," + std::to_string(e.trap_j) + ")";
  };

  int open_pairs = 0;
  int sqrt_swap_holds = 0;
  for (const auto& e : schedule.events) {
    if (e.trap_i < 0 || e.trap_j >= array.n_traps || e.trap_j != e.trap_i + 1) {
      violation("non-adjacent or out-of-range trap pair " + pair_tag(e));
      continue;
    }
    switch (e.type) {
      case ScheduleEvent::Type::merge:
        if (merged[e.trap_i] || merged[e.trap_j]) {
          violation("exclusivity: trap in two simultaneous merges at " +
                    pair_tag(e));
        } else {
          merged[e.trap_i] = merged[e.trap_j] = true;
          ++open_pairs;
        }
        break;
      case ScheduleEvent::Type::hold: {
        if (!(merged[e.trap_i] && merged[e.trap_j])) {
          violation("nesting: hold on unmerged pair " + pair_tag(e));
        }
        if (e.kind == GateKind::sqrt_swap) ++sqrt_swap_holds;
        if (omega_z > 0.0) {
          const double half_period = constants::pi / omega_z;
          const double n = (e.t_end - e.t_start) / half_period;
          if (std::abs(n - std::round(n)) > 1e-6 * std::max(n, 1.0)) {
            violation("quantization: hold duration is not an integer multiple "
                      "of the half-period at " + pair_tag(e));
          }
        }
        break;
      }
      case ScheduleEvent::Type::split:
        if (!(merged[e.trap_i] && merged[e.trap_j])) {
          violation("nesting: split of unmerged pair " + pair_tag(e));
        } else {
          merged[e.trap_i] = merged[e.trap_j] = false;
          --open_pairs;
        }
        break;
    }
  }
  if (open_pairs != 0) violation("nesting: schedule leaves merged pairs open");

  // routed-gate schedules (exactly one sqrt_swap hold) must restore occupancy
  if (sqrt_swap_holds == 1) {
    const auto sim = simulate_schedule(array, schedule);
    if (sim.final_occupancy != array.occupancy) {
      violation("occupancy: routed gate does not restore initial positions");
    }
  }
  return report;
}

SimulationResult simulate_schedule(const TrapArray& array,
                                   const MergeSchedule& schedule) {
  SimulationResult sim;
  sim.final_occupancy = array.occupancy;
  for (const auto& e : schedule.events) {
    if (e.type != ScheduleEvent::Type::hold) continue;
    if (e.trap_i < 0 || e.trap_j >= array.n_traps) continue;
    if (e.kind == GateKind::swap) {
      std::swap(sim.final_occupancy[e.trap_i], sim.final_occupancy[e.trap_j]);
    } else {
      sim.interactions.emplace_back(sim.final_occupancy[e.trap_i],
                                    sim.final_occupancy[e.trap_j]);
    }
  }
  return sim;
}

std::string format_schedule(const MergeSchedule& schedule) {
  std::ostringstream out;
  out.precision(12);
  for (const auto& e : schedule.events) {
    const char* type = e.type == ScheduleEvent::Type::merge   ? "MERGE"
                       : e.type == ScheduleEvent::Type::hold  ? "HOLD"
                                                              : "SPLIT";
    out << e.t_start << '\t' << e.t_end << '\t' << type << '\t' << e.trap_i
        << '\t' << e.trap_j << '\t'
        << (e.type == ScheduleEvent::Type::hold ? to_string(e.kind) : "-")
        << '\n';
  }
  return out.str();
}

MergeSchedule parse_schedule(std::istream& in) {
  MergeSchedule sched;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    ScheduleEvent e;
    std::string type, kind;
    if (!(ls >> e.t_start >> e.t_end >> type >> e.trap_i >> e.trap_j >> kind)) {
      throw ScheduleError("malformed schedule line: " + line);
    }
    if (type == "MERGE") e.type = ScheduleEvent::Type::merge;
    else if (type == "HOLD") e.type = ScheduleEvent::Type::hold;
    else if (type == "SPLIT") e.type = ScheduleEvent::Type::split;
    else throw ScheduleError("unknown event type: " + type);
    if (e.type == ScheduleEvent::Type::hold) {
      if (kind == "sqrt_swap") e.kind = GateKind::sqrt_swap;
      else if (kind == "swap") e.kind = GateKind::swap;
      else throw ScheduleError("unknown hold kind: " + kind);
    }
    sched.events.push_back(e);
    sched.total_time = std::max(sched.total_time, e.t_end);
  }
  return sched;
}

}  // namespace iongate
