#include "ftrt/timeline.hpp"

#include <algorithm>

namespace ftrt {

namespace {

bool reservation_order(const Reservation& a, const Reservation& b) {
    if (a.span.start != b.span.start) return a.span.start < b.span.start;
    if (a.span.end != b.span.end) return a.span.end < b.span.end;
    if (a.task != b.task) return a.task < b.task;
    return a.kind < b.kind;
}

} // namespace

const char* to_string(ReserveError err) {
    switch (err) {
    case ReserveError::PrimaryOverlap: return "PrimaryOverlap";
    case ReserveError::ForbiddenOverload: return "ForbiddenOverload";
    case ReserveError::SpaceExclusion: return "SpaceExclusion";
    case ReserveError::TimeExclusion: return "TimeExclusion";
    case ReserveError::FailedProcessor: return "FailedProcessor";
    case ReserveError::NoPrimary: return "NoPrimary";
    case ReserveError::Duplicate: return "Duplicate";
    case ReserveError::BadInterval: return "BadInterval";
    }
    return "?";
}

SystemTimeline::SystemTimeline(int processor_count) {
    procs_.resize(static_cast<std::size_t>(processor_count > 0 ? processor_count : 0));
    for (int i = 0; i < processor_count; ++i) procs_[static_cast<std::size_t>(i)].id = i + 1;
}

const ProcessorTimeline* SystemTimeline::proc(ProcId id) const {
    if (id < 1 || id > processor_count()) return nullptr;
    return &procs_[static_cast<std::size_t>(id - 1)];
}

ProcessorTimeline* SystemTimeline::proc(ProcId id) {
    if (id < 1 || id > processor_count()) return nullptr;
    return &procs_[static_cast<std::size_t>(id - 1)];
}

std::optional<ReserveError> SystemTimeline::try_reserve(const Reservation& res) {
    ProcessorTimeline* pt = proc(res.proc);
    if (pt == nullptr || res.span.length() <= 0) return ReserveError::BadInterval;
    if (pt->failed) return ReserveError::FailedProcessor;
    if (find(res.task, res.kind) != nullptr) return ReserveError::Duplicate;

    if (res.kind == CopyKind::Primary) {
        // A primary may not share cells with anything.
        for (const auto& other : pt->reservations)
            if (other.span.overlaps(res.span)) return ReserveError::PrimaryOverlap;
    } else {
        const Reservation* primary = find_primary_anywhere(res.task);
        if (primary == nullptr) return ReserveError::NoPrimary;
        if (primary->proc == res.proc) return ReserveError::SpaceExclusion;
        if (res.span.start < primary->span.end) return ReserveError::TimeExclusion;
        for (const auto& other : pt->reservations) {
            if (!other.span.overlaps(res.span)) continue;
            if (other.kind == CopyKind::Primary) return ReserveError::PrimaryOverlap;
            const Reservation* other_primary = find_primary_anywhere(other.task);
            // Existing backups always have a primary somewhere; if both
            // primaries sit on one processor the overload is unsafe.
            if (other_primary == nullptr || other_primary->proc == primary->proc)
                return ReserveError::ForbiddenOverload;
        }
    }

    auto pos = std::upper_bound(pt->reservations.begin(), pt->reservations.end(), res,
                                reservation_order);
    pt->reservations.insert(pos, res);
    return std::nullopt;
}

bool SystemTimeline::release(TaskId task, CopyKind kind) {
    for (auto& pt : procs_) {
        auto it = std::find_if(pt.reservations.begin(), pt.reservations.end(),
                               [&](const Reservation& r) { return r.task == task && r.kind == kind; });
        if (it != pt.reservations.end()) {
            pt.reservations.erase(it);
            return true;
        }
    }
    return false;
}

bool SystemTimeline::mark_killed(TaskId task, CopyKind kind) {
    for (auto& pt : procs_) {
        auto it = std::find_if(pt.reservations.begin(), pt.reservations.end(),
                               [&](const Reservation& r) { return r.task == task && r.kind == kind; });
        if (it != pt.reservations.end()) {
            killed_.push_back(*it);
            pt.reservations.erase(it);
            return true;
        }
    }
    return false;
}

void SystemTimeline::set_failed(ProcId id, Time at) {
    if (ProcessorTimeline* pt = proc(id)) {
        pt->failed = true;
        pt->failed_at = at;
        pt->recovered_at.reset();
    }
}

void SystemTimeline::set_recovered(ProcId id, Time at) {
    if (ProcessorTimeline* pt = proc(id)) {
        pt->failed = false;
        pt->recovered_at = at;
    }
}

bool SystemTimeline::is_failed(ProcId id) const {
    const ProcessorTimeline* pt = proc(id);
    return pt != nullptr && pt->failed;
}

const Reservation* SystemTimeline::find(TaskId task, CopyKind kind) const {
    for (const auto& pt : procs_)
        for (const auto& r : pt.reservations)
            if (r.task == task && r.kind == kind) return &r;
    return nullptr;
}

const Reservation* SystemTimeline::find_primary_anywhere(TaskId task) const {
    if (const Reservation* live = find(task, CopyKind::Primary)) return live;
    for (const auto& r : killed_)
        if (r.task == task && r.kind == CopyKind::Primary) return &r;
    return nullptr;
}

std::span<const Reservation> SystemTimeline::on_processor(ProcId id) const {
    const ProcessorTimeline* pt = proc(id);
    if (pt == nullptr) return {};
    return {pt->reservations.data(), pt->reservations.size()};
}

std::vector<Reservation> SystemTimeline::live_reservations() const {
    std::vector<Reservation> all;
    for (const auto& pt : procs_)
        all.insert(all.end(), pt.reservations.begin(), pt.reservations.end());
    return all;
}

bool SystemTimeline::is_free(ProcId id, const Interval& span) const {
    const ProcessorTimeline* pt = proc(id);
    if (pt == nullptr) return false;
    for (const auto& r : pt->reservations)
        if (r.span.overlaps(span)) return false;
    return true;
}

std::optional<Placement> SystemTimeline::find_primary_slot(Time ready, Time deadline,
                                                           Time len) const {
    if (len <= 0 || deadline - ready < len) return std::nullopt;
    for (Time start = ready; start + len <= deadline; ++start) {
        const Interval cand{start, start + len};
        for (const auto& pt : procs_) {
            if (pt.failed) continue;
            if (is_free(pt.id, cand)) return Placement{pt.id, cand};
        }
    }
    return std::nullopt;
}

std::optional<Placement> SystemTimeline::find_latest_backup_slot(Interval window, Time len,
                                                                 ProcId excluded_proc) const {
    if (len <= 0 || window.length() < len) return std::nullopt;
    for (Time start = window.end - len; start >= window.start; --start) {
        const Interval cand{start, start + len};
        for (const auto& pt : procs_) {
            if (pt.id == excluded_proc || pt.failed) continue;
            if (is_free(pt.id, cand)) return Placement{pt.id, cand};
        }
    }
    return std::nullopt;
}

std::optional<Placement> SystemTimeline::find_overload_slot(ProcId primary_proc,
                                                            Interval window, Time len) const {
    if (len <= 0 || window.length() < len) return std::nullopt;

    struct Candidate {
        Placement placement;
        Time total_overlap = 0;
        TaskId oldest_task = 0;
    };
    std::optional<Candidate> best;

    auto better = [](const Candidate& a, const Candidate& b) {
        if (a.total_overlap != b.total_overlap) return a.total_overlap > b.total_overlap;
        if (a.placement.span.start != b.placement.span.start)
            return a.placement.span.start > b.placement.span.start;
        if (a.oldest_task != b.oldest_task) return a.oldest_task < b.oldest_task;
        return a.placement.proc < b.placement.proc;
    };

    for (const auto& pt : procs_) {
        if (pt.id == primary_proc || pt.failed) continue;
        for (Time start = window.start; start + len <= window.end; ++start) {
            const Interval cand{start, start + len};
            Time total_overlap = 0;
            TaskId oldest_task = 0;
            bool legal = true;
            for (const auto& r : pt.reservations) {
                const Time ov = r.span.overlap_length(cand);
                if (ov == 0) continue;
                if (r.kind == CopyKind::Primary) {
                    legal = false;
                    break;
                }
                const Reservation* other_primary = find_primary_anywhere(r.task);
                if (other_primary == nullptr || other_primary->proc == primary_proc) {
                    legal = false;
                    break;
                }
                total_overlap += ov;
                if (oldest_task == 0 || r.task < oldest_task) oldest_task = r.task;
            }
            if (!legal || total_overlap == 0) continue;
            Candidate c{Placement{pt.id, cand}, total_overlap, oldest_task};
            if (!best || better(c, *best)) best = c;
        }
    }

    if (!best) return std::nullopt;
    return best->placement;
}

} // namespace ftrt
