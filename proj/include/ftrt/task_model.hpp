#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ftrt {

using Time = std::int64_t;
using TaskId = std::int32_t;
using ProcId = std::int32_t; // processors are numbered 1..P

// Aperiodic task: arrives at `arrival`, may start from `ready`, must finish
// strictly before `deadline`, and needs `wcet` contiguous time units.
struct TaskSpec {
    TaskId id{};
    Time arrival{};
    Time ready{};
    Time deadline{};
    Time wcet{};

    Time laxity() const { return deadline - ready - wcet; }
    bool operator==(const TaskSpec&) const = default;
};

enum class CopyKind : std::uint8_t { Primary, Backup };
const char* to_string(CopyKind kind);

struct TaskValidation {
    bool ok = true;
    std::vector<std::string> problems; // one entry per violated field constraint
};

TaskValidation validate_task(const TaskSpec& spec);

// Scenario-level check; returns a message naming the first duplicate id.
std::optional<std::string> find_duplicate_id(std::span<const TaskSpec> tasks);

// Per-time-unit transition rates of the fault state machine:
//   occurrence        healthy -> active
//   active_to_benign  active  -> benign (intermittent faults)
//   dies_away         active  -> gone   (transient faults)
//   benign_to_active  benign  -> active
struct FaultClassRates {
    double occurrence{};
    double active_to_benign{};
    double dies_away{};
    double benign_to_active{};
    bool operator==(const FaultClassRates&) const = default;
};

enum class FaultClass : std::uint8_t { Permanent, Transient, Intermittent };
const char* to_string(FaultClass fc);
std::optional<FaultClass> parse_fault_class(const std::string& name);

// Classifies by the sign pattern of the rate tuple. Exactly three patterns
// are meaningful; everything else (including the all-zero tuple) is
// unclassifiable and yields nullopt.
std::optional<FaultClass> classify_fault(const FaultClassRates& rates);

// One scripted processor fault. `duration` is the active span of a
// non-permanent fault; ignored for permanent ones.
struct FaultEvent {
    ProcId proc{};
    Time at{};
    FaultClass fault_class{FaultClass::Permanent};
    Time duration{1};
    bool operator==(const FaultEvent&) const = default;
};

std::optional<std::string> validate_fault_event(const FaultEvent& ev, int processors);

struct WorkloadParams {
    int task_count{};
    Time arrival_min{}, arrival_max{};
    Time wcet_min{1}, wcet_max{1};
    Time laxity_min{}, laxity_max{};
    int processors{2};
    std::uint64_t seed{};
    bool operator==(const WorkloadParams&) const = default;
};

// Empty string when valid, otherwise the first problem found.
std::string validate_workload_params(const WorkloadParams& params);

// Seed-deterministic task set, sorted by arrival time, ids 1..task_count.
// Ready time equals arrival time; deadline = ready + wcet + laxity.
std::vector<TaskSpec> generate_workload(const WorkloadParams& params);

} // namespace ftrt
