#include "ftrt/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ftrt {

Time backup_length(const SchedulerPolicy& policy, Time wcet) {
    if (policy.backup_scale <= 0.0 || policy.backup_scale > 1.0)
        throw std::invalid_argument("backup_scale must be in (0, 1]");
    const Time len = static_cast<Time>(
        std::ceil(policy.backup_scale * static_cast<double>(wcet) - 1e-9));
    return len < 1 ? 1 : len;
}

AdmissionDecision admit(SystemTimeline& system, const TaskSpec& task,
                        const SchedulerPolicy& policy) {
    AdmissionDecision d;
    d.task = task.id;

    const auto primary_slot = system.find_primary_slot(task.ready, task.deadline, task.wcet);
    if (!primary_slot) {
        d.reject_reason = kNoPrimarySlot;
        return d;
    }
    const Reservation primary{task.id, CopyKind::Primary, primary_slot->proc, primary_slot->span};

    if (!policy.fault_tolerance) {
        if (system.try_reserve(primary))
            throw std::logic_error("admit: primary placement rejected by reserve");
        d.committed = true;
        d.primary = primary;
        return d;
    }

    const Time bk_len = backup_length(policy, task.wcet);
    const Interval window{primary.span.end, task.deadline};

    std::optional<Placement> backup_slot;
    bool overloaded = false;
    if (policy.overloading) {
        backup_slot = system.find_overload_slot(primary.proc, window, bk_len);
        overloaded = backup_slot.has_value();
    }
    if (!backup_slot)
        backup_slot = system.find_latest_backup_slot(window, bk_len, primary.proc);
    if (!backup_slot) {
        d.reject_reason = kNoBackupSlot;
        return d;
    }

    const Reservation backup{task.id, CopyKind::Backup, backup_slot->proc, backup_slot->span};
    if (system.try_reserve(primary))
        throw std::logic_error("admit: primary placement rejected by reserve");
    if (auto err = system.try_reserve(backup)) {
        system.release(task.id, CopyKind::Primary);
        throw std::logic_error(std::string("admit: backup placement rejected by reserve: ") +
                               to_string(*err));
    }

    d.committed = true;
    d.primary = primary;
    d.backup = backup;
    d.overloaded = overloaded;
    return d;
}

std::vector<AdmissionDecision> admit_batch(SystemTimeline& system,
                                           std::span<const TaskSpec> tasks,
                                           const SchedulerPolicy& policy) {
    std::vector<std::size_t> order(tasks.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (tasks[a].deadline != tasks[b].deadline) return tasks[a].deadline < tasks[b].deadline;
        return tasks[a].id < tasks[b].id;
    });

    std::vector<AdmissionDecision> decisions(tasks.size());
    for (std::size_t idx : order) decisions[idx] = admit(system, tasks[idx], policy);
    return decisions;
}

std::map<std::string, int> reject_reason_report(std::span<const AdmissionDecision> decisions) {
    std::map<std::string, int> counts;
    for (const auto& d : decisions)
        if (!d.committed) ++counts[d.reject_reason];
    return counts;
}

} // namespace ftrt
