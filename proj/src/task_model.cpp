#include "ftrt/task_model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ftrt/rng.hpp"

namespace ftrt {

const char* to_string(CopyKind kind) {
    return kind == CopyKind::Primary ? "P" : "B";
}

const char* to_string(FaultClass fc) {
    switch (fc) {
    case FaultClass::Permanent: return "permanent";
    case FaultClass::Transient: return "transient";
    case FaultClass::Intermittent: return "intermittent";
    }
    return "?";
}

std::optional<FaultClass> parse_fault_class(const std::string& name) {
    if (name == "permanent") return FaultClass::Permanent;
    if (name == "transient") return FaultClass::Transient;
    if (name == "intermittent") return FaultClass::Intermittent;
    return std::nullopt;
}

TaskValidation validate_task(const TaskSpec& spec) {
    TaskValidation v;
    auto fail = [&](const std::string& msg) {
        v.ok = false;
        v.problems.push_back("task " + std::to_string(spec.id) + ": " + msg);
    };
    if (spec.wcet < 1)
        fail("c >= 1 violated (c=" + std::to_string(spec.wcet) + ")");
    if (spec.arrival < 0)
        fail("a >= 0 violated (a=" + std::to_string(spec.arrival) + ")");
    if (spec.ready < spec.arrival)
        fail("r >= a violated (r=" + std::to_string(spec.ready) +
             ", a=" + std::to_string(spec.arrival) + ")");
    if (spec.deadline < spec.ready + spec.wcet)
        fail("d >= r+c violated (d=" + std::to_string(spec.deadline) +
             ", r+c=" + std::to_string(spec.ready + spec.wcet) + ")");
    return v;
}

std::optional<std::string> find_duplicate_id(std::span<const TaskSpec> tasks) {
    std::set<TaskId> seen;
    for (const auto& t : tasks) {
        if (!seen.insert(t.id).second)
            return "duplicate task id " + std::to_string(t.id);
    }
    return std::nullopt;
}

std::optional<FaultClass> classify_fault(const FaultClassRates& r) {
    const bool a = r.occurrence > 0;
    const bool b = r.active_to_benign > 0;
    const bool c = r.dies_away > 0;
    const bool d = r.benign_to_active > 0;
    if (r.occurrence < 0 || r.active_to_benign < 0 || r.dies_away < 0 ||
        r.benign_to_active < 0)
        return std::nullopt;
    if (a && !b && !c && !d) return FaultClass::Permanent;
    if (a && !b && c && !d) return FaultClass::Transient;
    if (a && b && !c && d) return FaultClass::Intermittent;
    return std::nullopt;
}

std::optional<std::string> validate_fault_event(const FaultEvent& ev, int processors) {
    if (ev.proc < 1 || ev.proc > processors)
        return "fault references processor " + std::to_string(ev.proc) +
               " outside 1.." + std::to_string(processors);
    if (ev.at < 0) return "fault strike time must be >= 0";
    if (ev.fault_class != FaultClass::Permanent && ev.duration < 1)
        return "non-permanent fault needs duration >= 1";
    return std::nullopt;
}

std::string validate_workload_params(const WorkloadParams& p) {
    if (p.task_count < 0) return "task_count must be >= 0";
    if (p.arrival_min < 0) return "arrival window must start at >= 0";
    if (p.arrival_max < p.arrival_min) return "empty arrival window";
    if (p.wcet_min < 1) return "wcet range must start at >= 1";
    if (p.wcet_max < p.wcet_min) return "empty wcet range";
    if (p.laxity_min < 0) return "laxity range must start at >= 0";
    if (p.laxity_max < p.laxity_min) return "empty laxity range";
    if (p.processors < 1) return "processors must be >= 1";
    return {};
}

std::vector<TaskSpec> generate_workload(const WorkloadParams& p) {
    const std::string err = validate_workload_params(p);
    if (!err.empty()) throw std::invalid_argument("workload: " + err);

    Rng rng(p.seed);
    std::vector<TaskSpec> tasks;
    tasks.reserve(static_cast<std::size_t>(p.task_count));
    for (int i = 0; i < p.task_count; ++i) {
        TaskSpec t;
        t.id = i + 1;
        t.arrival = rng.uniform(p.arrival_min, p.arrival_max);
        t.ready = t.arrival;
        t.wcet = rng.uniform(p.wcet_min, p.wcet_max);
        t.deadline = t.ready + t.wcet + rng.uniform(p.laxity_min, p.laxity_max);
        tasks.push_back(t);
    }
    std::stable_sort(tasks.begin(), tasks.end(),
                     [](const TaskSpec& a, const TaskSpec& b) { return a.arrival < b.arrival; });
    return tasks;
}

} // namespace ftrt
