#include "minicg/classic.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "minicg/diagnostics.hpp"

namespace minicg {

std::vector<MethodId> find_entry_points(const ProgramModel& model) {
    std::vector<MethodId> out;
    for (const auto& cls : model.classes)
        for (const auto& m : cls.methods)
            if (m.name == "main")
                out.push_back(m.id());
    return out;
}

namespace {

// FIFO worklist with a membership guard so no method queues twice.
class Worklist {
  public:
    bool push(const MethodId& id) {
        if (enqueued_.count(id))
            return false;
        enqueued_.insert(id);
        queue_.push_back(id);
        return true;
    }

    MethodId pull() {
        MethodId id = queue_.front();
        queue_.pop_front();
        enqueued_.erase(id);
        return id;
    }

    bool empty() const { return queue_.empty(); }

  private:
    std::deque<MethodId> queue_;
    std::set<MethodId> enqueued_;
};

using SiteTargets = std::map<std::size_t, std::set<MethodId>>;

} // namespace

ClassicResult classic_build(const ProgramModel& model,
                            bool use_live_types,
                            const std::vector<MethodId>* entries_override) {
    ClassHierarchy h = build_hierarchy(model);

    std::vector<MethodId> entries =
        entries_override ? *entries_override : find_entry_points(model);
    for (const auto& entry : entries)
        if (!model.find_method(entry))
            throw Error(DiagCode::UnknownMethod, "no entry method '" + entry.str() + "'");

    ClassicResult result;
    CallGraph& g = result.graph;
    Worklist worklist;
    for (const auto& entry : entries) {
        g.entries.insert(entry);
        g.nodes.insert(entry);
        worklist.push(entry);
    }

    std::optional<LiveTypeSet> live;
    if (use_live_types)
        live = propagate_live_types(model, g);

    std::set<MethodId> processed;
    std::map<MethodId, SiteTargets> last_targets;

    while (!worklist.empty()) {
        MethodId current = worklist.pull();
        ++result.counters.methods_processed;
        processed.insert(current);

        const MethodDecl* decl = model.find_method(current);
        for (const auto& site : decl->call_sites) {
            std::set<MethodId> targets =
                resolve_targets(model, h, current, site, live ? &*live : nullptr);
            ++result.counters.resolutions;
            std::set<MethodId>& known = last_targets[current][site.index];
            for (const auto& target : targets) {
                if (known.count(target))
                    continue;
                g.add_link(current, target, site.index);
                if (!processed.count(target))
                    worklist.push(target);
            }
            known = std::move(targets);
        }

        if (!use_live_types)
            continue;

        // Live types may have grown; any processed method whose target sets
        // change under the new set goes back on the list.
        LiveTypeSet updated = propagate_live_types(model, g);
        if (updated == *live)
            continue;
        live = std::move(updated);
        for (const auto& method : processed) {
            const MethodDecl* m = model.find_method(method);
            bool changed = false;
            for (const auto& site : m->call_sites) {
                std::set<MethodId> targets = resolve_targets(model, h, method, site, &*live);
                if (targets != last_targets[method][site.index]) {
                    changed = true;
                    break;
                }
            }
            if (changed && worklist.push(method))
                ++result.counters.reenqueues;
        }
    }

    if (use_live_types) {
        for (const auto& method : processed) {
            const MethodDecl* m = model.find_method(method);
            for (const auto& site : m->call_sites) {
                std::set<MethodId> cha = resolve_targets(model, h, method, site, nullptr);
                const std::set<MethodId>& kept = last_targets[method][site.index];
                if (cha != kept)
                    result.pruned_sites.push_back({method, site.index, cha, kept});
            }
        }
    }

    return result;
}

ClassicResult classic_incremental(const ProgramModel& model,
                                  const CallGraph& prior,
                                  const MethodId& edited) {
    if (!model.find_method(edited))
        throw Error(DiagCode::UnknownMethod, "no method '" + edited.str() + "' to edit");

    ClassHierarchy h = build_hierarchy(model);

    ClassicResult result;
    CallGraph& g = result.graph;
    g = prior;
    std::erase_if(g.call_edges, [&](const CallEdge& e) { return e.caller == edited; });
    g.self_loops.erase(edited);
    g.nodes.insert(edited);

    // Every other prior node keeps its links: a body edit cannot change the
    // resolution of any other method's sites.
    std::set<MethodId> processed = prior.nodes;
    processed.erase(edited);

    std::vector<MethodId> discovered;
    ++result.counters.methods_processed;
    processed.insert(edited);
    for (const auto& site : model.find_method(edited)->call_sites) {
        std::set<MethodId> targets = resolve_targets(model, h, edited, site);
        ++result.counters.resolutions;
        for (const auto& target : targets) {
            g.add_link(edited, target, site.index);
            if (!processed.count(target))
                discovered.push_back(target);
        }
    }

    // New callees change reachability only if the edited method itself is
    // still reached; otherwise the restriction below discards them anyway.
    if (!discovered.empty() && reachable_from_entries(g).count(edited)) {
        Worklist worklist;
        for (const auto& target : discovered)
            worklist.push(target);
        while (!worklist.empty()) {
            MethodId current = worklist.pull();
            ++result.counters.methods_processed;
            processed.insert(current);

            const MethodDecl* decl = model.find_method(current);
            for (const auto& site : decl->call_sites) {
                std::set<MethodId> targets = resolve_targets(model, h, current, site);
                ++result.counters.resolutions;
                for (const auto& target : targets) {
                    g.add_link(current, target, site.index);
                    if (!processed.count(target))
                        worklist.push(target);
                }
            }
        }
    }

    restrict_to_reachable(g);
    return result;
}

} // namespace minicg
