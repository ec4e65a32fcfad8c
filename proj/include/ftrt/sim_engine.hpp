#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftrt/rng.hpp"
#include "ftrt/scheduler.hpp"
#include "ftrt/task_model.hpp"
#include "ftrt/timeline.hpp"

namespace ftrt {

// A scenario that cannot be simulated (bad task, bad fault reference, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The engine broke one of its own invariants; never expected on valid input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class EventKind {
    Arrive, Commit, Reject, Start, Complete, Dealloc,
    Fault, Crash, Recover, Promote, Miss,
};
const char* to_string(EventKind kind);

struct TraceEvent {
    Time t{};
    EventKind kind{};
    std::optional<TaskId> task;
    std::optional<ProcId> proc;
    std::optional<CopyKind> copy;
    bool operator==(const TraceEvent&) const = default;
};

// Line format: `t=<int> <KIND> task=<id|-> proc=<id|-> kind=<P|B|->`
std::string format_trace_event(const TraceEvent& e);
std::optional<TraceEvent> parse_trace_line(const std::string& line);
std::string serialize_trace(std::span<const TraceEvent> trace);

struct Metrics {
    int arrived = 0;
    int committed = 0;
    int rejected = 0;
    int misses = 0;                  // deadline misses among committed tasks
    std::int64_t busy_slots = 0;     // processor time actually executed
    std::int64_t reserved_backup_time = 0; // distinct cells claimed by backups at commit
    std::int64_t overload_savings = 0;     // cells shared with already-reserved backups
    std::int64_t reclaimed_backup_time = 0; // slot-units freed by deallocation
    double guarantee_ratio = 0.0;
    double utilization = 0.0;
    bool operator==(const Metrics&) const = default;
};

struct SimConfig {
    int processors = 2;
    Time horizon = 0; // 0 = derive from max deadline
    std::vector<TaskSpec> tasks;
    std::optional<WorkloadParams> workload; // provenance echo when tasks were generated
    std::vector<FaultEvent> fault_script;
    std::map<ProcId, FaultClassRates> fault_rates;
    SchedulerPolicy policy;
    std::uint64_t seed = 0;
};

// Empty when valid; otherwise the first diagnostic. `resolve_config` applies
// derived defaults (horizon, workload expansion) and validates.
std::string validate_config(const SimConfig& config);
SimConfig resolve_config(SimConfig config);

std::string input_hash(const SimConfig& config);

enum class ReservationStatus { Reserved, Completed, Deallocated, Killed, Lost };
const char* to_string(ReservationStatus s);

struct ReservationRecord {
    Reservation res;
    ReservationStatus status{ReservationStatus::Reserved};
    bool executed = false;
    bool operator==(const ReservationRecord&) const = default;
};

// Backup re-placement (or loss) after a processor crash.
struct BackupMove {
    Time t{};
    TaskId task{};
    bool lost = false;
    std::optional<Reservation> moved_to;
    bool operator==(const BackupMove&) const = default;
};

struct SimReport {
    SimConfig config;
    std::string hash; // input hash echo, identical across policy comparisons
    std::vector<TraceEvent> trace;
    Metrics metrics;
    std::vector<AdmissionDecision> decisions; // in admission order
    std::vector<ReservationRecord> reservations;
    std::vector<BackupMove> backup_moves;
    std::vector<std::string> warnings;
};

// Fault lifecycle per processor. Gone behaves like Dormant for new
// occurrences, so a transient fault process can strike repeatedly.
enum class FaultState { Dormant, Active, Benign, Gone };
FaultState fault_machine_step(FaultState state, const FaultClassRates& rates, Rng& rng);

// Deterministic discrete-time run over t = 0..horizon. Per tick:
//   completions (+ backup deallocation) -> fault transitions -> crash
//   handling (kill, promote, re-place) -> arrivals -> starts -> miss check.
// Completions are handled first so a slot freed at t is visible to arrivals
// at t, and work that finished strictly before a strike is never lost.
SimReport run(const SimConfig& config);

// Recomputes metrics by replaying the report's trace against its committed
// decisions and backup moves; run() tallies the same quantities online.
Metrics compute_metrics(const SimReport& report);

} // namespace ftrt
