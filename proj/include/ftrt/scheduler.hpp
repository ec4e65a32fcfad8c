#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ftrt/timeline.hpp"

namespace ftrt {

struct SchedulerPolicy {
    bool overloading = true;      // try to overload backups onto existing backup slots
    double backup_scale = 1.0;    // backup length = ceil(scale * c), in (0, 1]
    bool fault_tolerance = true;  // when off, tasks are committed with a primary only
    bool operator==(const SchedulerPolicy&) const = default;
};

Time backup_length(const SchedulerPolicy& policy, Time wcet);

inline const char* kNoPrimarySlot = "no primary slot";
inline const char* kNoBackupSlot = "no backup slot";

struct AdmissionDecision {
    TaskId task{};
    bool committed = false;
    std::string reject_reason;
    std::optional<Reservation> primary;
    std::optional<Reservation> backup;
    bool overloaded = false;
    bool operator==(const AdmissionDecision&) const = default;
};

// Admission pipeline for one task:
//   1. earliest primary slot within [r, d); none -> reject "no primary slot"
//   2. backup window is [primary end, d); overload first when enabled,
//      otherwise (or as fallback) the latest fresh slot
//   3. no backup slot -> reject and leave the timeline untouched
//   4. both found -> reserve both, committed
// With fault tolerance off only the primary is placed.
AdmissionDecision admit(SystemTimeline& system, const TaskSpec& task,
                        const SchedulerPolicy& policy);

// Admits a same-instant batch in EDF order (ascending deadline, ties by
// ascending id); decisions come back in input order.
std::vector<AdmissionDecision> admit_batch(SystemTimeline& system,
                                           std::span<const TaskSpec> tasks,
                                           const SchedulerPolicy& policy);

std::map<std::string, int> reject_reason_report(std::span<const AdmissionDecision> decisions);

} // namespace ftrt
