#include "minicg/krab.hpp"

#include <cassert>

#include "minicg/classic.hpp"
#include "minicg/diagnostics.hpp"

namespace minicg {
namespace {

// The traversal proper. state.graph must already contain the root node and
// the entry set; state.visited may be pre-seeded (incremental runs).
//
// state.stack holds the physical frames; `control` tracks the indices of the
// active ones (bottom to top). The two views coincide unless a fault hook
// suppresses a pop, in which case the frame stays physically in the stack
// while control moves on — exactly the residue validate_traversal reports.
void run_traversal(TraversalState& st, const ProgramModel& model,
                   const ClassHierarchy& h, const MethodId& root,
                   const FaultHooks* hooks) {
    std::vector<std::size_t> control;
    std::set<MethodId> on_stack;
    std::uint64_t pop_events = 0;

    auto push = [&](const MethodId& method) {
        st.weighted_steps += control.size(); // depth at the moment of the push
        Frame frame;
        frame.method = method;
        frame.seq = st.pushes;
        st.stack.push_back(std::move(frame));
        control.push_back(st.stack.size() - 1);
        on_stack.insert(method);
        ++st.pushes;
    };

    push(root);

    while (!control.empty()) {
        assert(on_stack.size() == control.size());
        assert(st.stack[control.front()].method == root);

        Frame& top = st.stack[control.back()];
        const MethodDecl* decl = model.find_method(top.method);

        if (top.next_target == top.pending.size() && top.cursor < decl->call_sites.size()) {
            const CallSite& site = decl->call_sites[top.cursor];
            std::set<MethodId> targets = resolve_targets(model, h, top.method, site);
            top.pending.assign(targets.begin(), targets.end());
            top.next_target = 0;
            continue;
        }

        if (top.next_target < top.pending.size()) {
            // One function call handled per iteration; a polymorphic site's
            // remaining targets stay pending until each has been processed.
            const MethodId current = top.method;
            const std::size_t site_index = top.cursor;
            MethodId target = top.pending[top.next_target++];
            if (top.next_target == top.pending.size()) {
                top.cursor++;
                top.pending.clear();
                top.next_target = 0;
            }
            ++st.steps;

            st.graph.add_link(current, target, site_index);
            if (target == current) {
                continue; // direct recursion: self-loop marker only
            }
            if (on_stack.count(target) || st.visited.count(target)) {
                continue; // back edge or fully explored subtree: edge only
            }
            push(target);
            continue;
        }

        // Frame exhausted: pop, link back to the parent, mark explored.
        const std::size_t index = control.back();
        const MethodId method = st.stack[index].method;
        control.pop_back();
        on_stack.erase(method);
        st.visited.insert(method);

        const bool suppressed = hooks && pop_events < hooks->suppress_first_pops;
        ++pop_events;
        if (suppressed)
            continue; // frame never returns: it stays in the stack, no link

        if (!control.empty()) {
            const MethodId parent = st.stack[control.back()].method;
            st.graph.predecessor_edges.emplace(method, parent);
        }
        // Frames above `index` can only be suppressed leftovers, so erasing
        // here never disturbs an active index.
        st.stack.erase(st.stack.begin() + static_cast<std::ptrdiff_t>(index));
        ++st.pops;
    }
}

} // namespace

TraversalState krab_build(const ProgramModel& model,
                          const ClassHierarchy& h,
                          const MethodId& entry,
                          const FaultHooks* hooks) {
    if (!model.find_method(entry))
        throw Error(DiagCode::UnknownMethod, "no entry method '" + entry.str() + "'");

    TraversalState st;
    st.graph.entries.insert(entry);
    st.graph.nodes.insert(entry);
    run_traversal(st, model, h, entry, hooks);
    return st;
}

std::optional<SkipFault> validate_traversal(const TraversalState& state) {
    if (state.stack.empty())
        return std::nullopt;
    return SkipFault{state.stack};
}

namespace {

TraversalState incremental_update(const ProgramModel& model,
                                  const ClassHierarchy& h,
                                  const CallGraph& prior,
                                  const MethodId& edited,
                                  std::set<MethodId> entries) {
    if (!model.find_method(edited))
        throw Error(DiagCode::UnknownMethod, "no method '" + edited.str() + "' to edit");

    TraversalState st;
    st.graph = prior;
    st.graph.entries = std::move(entries);
    std::erase_if(st.graph.call_edges,
                  [&](const CallEdge& e) { return e.caller == edited; });
    st.graph.self_loops.erase(edited);
    st.graph.nodes.insert(edited);

    // Only the edited method's body changed, so every other prior node keeps
    // its links and is treated as already explored.
    st.visited = prior.nodes;
    st.visited.erase(edited);

    run_traversal(st, model, h, edited, nullptr);
    restrict_to_reachable(st.graph);
    return st;
}

} // namespace

TraversalState krab_incremental(const ProgramModel& model,
                                const ClassHierarchy& h,
                                const CallGraph& prior,
                                const MethodId& edited,
                                const MethodId& entry) {
    if (!model.find_method(entry))
        throw Error(DiagCode::UnknownMethod, "no entry method '" + entry.str() + "'");
    return incremental_update(model, h, prior, edited, {entry});
}

TraversalState krab_incremental(const ProgramModel& model,
                                const ClassHierarchy& h,
                                const CallGraph& prior,
                                const MethodId& edited) {
    return incremental_update(model, h, prior, edited, prior.entries);
}

MultiEntryResult krab_multi_entry(const ProgramModel& model, const ClassHierarchy& h) {
    std::vector<MethodId> entries = find_entry_points(model);
    if (entries.empty())
        throw Error(DiagCode::NoEntryPoint, "no method named 'main' declared");

    MultiEntryResult result;
    std::set<CallEdge> edge_union;
    for (const auto& entry : entries) {
        TraversalState st = krab_build(model, h, entry);
        result.graph.nodes.insert(st.graph.nodes.begin(), st.graph.nodes.end());
        result.graph.self_loops.insert(st.graph.self_loops.begin(),
                                       st.graph.self_loops.end());
        result.graph.entries.insert(entry);
        for (const auto& edge : st.graph.call_edges)
            edge_union.insert(edge);
        for (const auto& [child, parent] : st.graph.predecessor_edges)
            result.graph.predecessor_edges.emplace(child, parent); // first run wins
        result.runs.push_back(std::move(st));
    }
    result.graph.call_edges.assign(edge_union.begin(), edge_union.end());
    return result;
}

} // namespace minicg
