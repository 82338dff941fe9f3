#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace iongate {

/// Linear array of single-ion traps; adjacent traps can merge.
struct TrapArray {
  int n_traps = 0;
  double trap_length_L = 0.0;          // m
  std::vector<std::string> occupancy;  // qubit label per trap, one ion each
};

TrapArray make_trap_array(int n_traps, double trap_length_L);

enum class GateKind { sqrt_swap, swap };

const char* to_string(GateKind kind);

struct ScheduleEvent {
  enum class Type { merge, hold, split };
  Type type;
  int trap_i = 0;  // left trap of the merged pair
  int trap_j = 0;  // right trap (= trap_i + 1 for linear adjacency)
  double t_start = 0.0;  // s
  double t_end = 0.0;    // s
  GateKind kind = GateKind::sqrt_swap;  // meaningful for holds only
};

struct MergeSchedule {
  std::vector<ScheduleEvent> events;
  double total_time = 0.0;  // s
};

/// Compiles a remote two-qubit gate into SWAP chains that bring the logical
/// states adjacent, one sqrt(SWAP) hold, and the inverse chain restoring all
/// positions. SWAP is realized as two consecutive sqrt(SWAP) holds (2 t_g);
/// every hold is rounded up to an integer multiple of the collision
/// half-period pi/omega_z.
MergeSchedule route_remote_gate(const TrapArray& array,
                                const std::string& qubit_a,
                                const std::string& qubit_b, double gate_time_tg,
                                double omega_z);

struct ScheduleReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks merge/split nesting, pairwise exclusivity, half-period quantization
/// of holds, and that routed gates restore the initial occupancy. Violations
/// are data, not errors. omega_z <= 0 skips the quantization check.
ScheduleReport validate_schedule(const TrapArray& array,
                                 const MergeSchedule& schedule,
                                 double omega_z = 0.0);

struct SimulationResult {
  std::vector<std::string> final_occupancy;
  /// Qubit-label pairs that interacted via a sqrt(SWAP) hold, in order.
  std::vector<std::pair<std::string, std::string>> interactions;
};

/// Applies SWAP semantics (swap holds exchange occupants, sqrt_swap holds
/// record an interaction) to the array occupancy.
SimulationResult simulate_schedule(const TrapArray& array,
                                   const MergeSchedule& schedule);

/// Line-oriented export: `t_start  t_end  MERGE|SPLIT|HOLD  trap_i  trap_j  kind`.
std::string format_schedule(const MergeSchedule& schedule);

MergeSchedule parse_schedule(std::istream& in);

}  // namespace iongate
