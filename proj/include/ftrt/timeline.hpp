#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ftrt/task_model.hpp"

namespace ftrt {

// Half-open [start, end) slot extent.
struct Interval {
    Time start{};
    Time end{};

    Time length() const { return end - start; }
    bool overlaps(const Interval& o) const { return start < o.end && o.start < end; }
    Time overlap_length(const Interval& o) const {
        const Time lo = start > o.start ? start : o.start;
        const Time hi = end < o.end ? end : o.end;
        return hi > lo ? hi - lo : 0;
    }
    bool operator==(const Interval&) const = default;
};

struct Reservation {
    TaskId task{};
    CopyKind kind{CopyKind::Primary};
    ProcId proc{};
    Interval span{};
    bool operator==(const Reservation&) const = default;
};

enum class ReserveError {
    PrimaryOverlap,   // any overlap involving a primary copy
    ForbiddenOverload, // overlapping backups whose primaries share a processor
    SpaceExclusion,   // backup on its own primary's processor
    TimeExclusion,    // backup starting before its primary's reserved end
    FailedProcessor,  // target processor currently failed
    NoPrimary,        // backup reserved for a task with no primary anywhere
    Duplicate,        // (task, kind) already reserved
    BadInterval,      // empty interval or unknown processor
};
const char* to_string(ReserveError err);

struct Placement {
    ProcId proc{};
    Interval span{};
    bool operator==(const Placement&) const = default;
};

struct ProcessorTimeline {
    ProcId id{};
    std::vector<Reservation> reservations; // live, sorted by (start, end, task, kind)
    bool failed = false;
    Time failed_at = -1;
    std::optional<Time> recovered_at;
    bool operator==(const ProcessorTimeline&) const = default;
};

// Per-processor reservation sets plus failure state. Placement queries encode
// the scheduling rules:
//   - a primary never shares cells with anything on its processor;
//   - backups of one task live on a different processor than the primary
//     (space exclusion) and start no earlier than the primary's reserved end
//     (time exclusion);
//   - two backups may share cells on one processor (overloading) only while
//     every pairwise-overlapping pair has primaries on distinct processors.
class SystemTimeline {
public:
    SystemTimeline() = default;
    explicit SystemTimeline(int processor_count);

    int processor_count() const { return static_cast<int>(procs_.size()); }

    // nullopt on success. On any error the timeline is unchanged.
    std::optional<ReserveError> try_reserve(const Reservation& res);

    // Removes a live reservation; false when absent. Overloaded backups of
    // other tasks are untouched.
    bool release(TaskId task, CopyKind kind);

    // Drops a reservation from occupancy but remembers it, so overload checks
    // can still resolve the primary location of a promoted backup.
    bool mark_killed(TaskId task, CopyKind kind);

    void set_failed(ProcId proc, Time at);
    void set_recovered(ProcId proc, Time at);
    bool is_failed(ProcId proc) const;

    const Reservation* find(TaskId task, CopyKind kind) const;
    // Live first, then killed tombstones.
    const Reservation* find_primary_anywhere(TaskId task) const;

    std::span<const Reservation> on_processor(ProcId proc) const;
    std::vector<Reservation> live_reservations() const;
    const std::vector<ProcessorTimeline>& processors() const { return procs_; }

    bool is_free(ProcId proc, const Interval& span) const;

    // Earliest feasible start within [ready, deadline), ties to the lowest
    // processor index. Primaries may not overlap anything.
    std::optional<Placement> find_primary_slot(Time ready, Time deadline, Time len) const;

    // Latest start within `window` on a fresh (overlap-free) slot, skipping
    // `excluded_proc`; ties to the lowest processor index.
    std::optional<Placement> find_latest_backup_slot(Interval window, Time len,
                                                     ProcId excluded_proc) const;

    // Legal overload placement: inside `window`, off `primary_proc`, no
    // primary overlap, and every overlapped backup's primary on a processor
    // other than `primary_proc`. Candidates are ranked by most total overlap
    // with existing backups, then latest start, then the oldest (lowest id)
    // overlapped task, then lowest processor index.
    std::optional<Placement> find_overload_slot(ProcId primary_proc, Interval window,
                                                Time len) const;

    bool operator==(const SystemTimeline&) const = default;

private:
    const ProcessorTimeline* proc(ProcId id) const;
    ProcessorTimeline* proc(ProcId id);

    std::vector<ProcessorTimeline> procs_;
    std::vector<Reservation> killed_;
};

} // namespace ftrt
