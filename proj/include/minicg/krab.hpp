#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "minicg/call_graph.hpp"
#include "minicg/hierarchy.hpp"
#include "minicg/model.hpp"

namespace minicg {

/// One stack entry of the traversal. `cursor` is the index of the next
/// unprocessed call site; `pending` holds the resolved targets of the site
/// currently being processed (all targets of a polymorphic site are handled
/// before the cursor advances).
struct Frame {
    MethodId method;
    std::size_t cursor = 0;
    std::vector<MethodId> pending;
    std::size_t next_target = 0;
    std::uint64_t seq = 0; // push order, for residual-frame reporting
};

/// Machine state of the stack traversal.
///
/// `steps` counts processed (site, target) pairs — the loop-body executions.
/// `weighted_steps` adds the stack depth at the moment of each push, so a
/// nest of n single-call methods accumulates 1 + 2 + ... + n.
struct TraversalState {
    std::vector<Frame> stack; // top = back; after a run, residual frames only
    CallGraph graph;
    std::set<MethodId> visited; // fully explored methods
    std::uint64_t steps = 0;
    std::uint64_t weighted_steps = 0;
    std::uint64_t pushes = 0;
    std::uint64_t pops = 0;
};

/// Test-harness hook: suppresses the physical pop (and its return link) for
/// the first `suppress_first_pops` pop events, leaving those frames in the
/// stack. Not a production code path.
struct FaultHooks {
    std::uint64_t suppress_first_pops = 0;
};

/// Signaled by validate_traversal when frames failed to return: the stack
/// is not empty after the last pop.
struct SkipFault {
    std::vector<Frame> residual_frames; // bottom-to-top
};

/// Depth-first construction from `entry` using an explicit stack.
///
/// The entry is pushed as root. While the top frame has an unprocessed call
/// site, each resolved target is handled in lexicographic order: a direct
/// self call marks the self-loop (once); a call to a method elsewhere on the
/// stack or already fully explored adds only the call edge; anything else
/// adds the edge and descends. An exhausted frame is popped, gains a
/// predecessor edge to the frame beneath it, and is marked visited; popping
/// the root ends the run.
TraversalState krab_build(const ProgramModel& model,
                          const ClassHierarchy& h,
                          const MethodId& entry,
                          const FaultHooks* hooks = nullptr);

/// ok (nullopt) iff the stack is empty once the run finished; otherwise the
/// residual frames, i.e. the methods that skipped their return.
std::optional<SkipFault> validate_traversal(const TraversalState& state);

/// Incremental update of `prior` (built from a model differing only in
/// `edited`'s body): strips the edited method's outgoing call edges and
/// self-loop, re-runs the traversal rooted at `edited` with every other
/// prior node pre-marked visited, then drops whatever is no longer
/// reachable from `entry`. Equal to a fresh build under graphs_equal.
TraversalState krab_incremental(const ProgramModel& model,
                                const ClassHierarchy& h,
                                const CallGraph& prior,
                                const MethodId& edited,
                                const MethodId& entry);

/// Same update keeping the prior graph's own entry set (covers priors built
/// by krab_multi_entry).
TraversalState krab_incremental(const ProgramModel& model,
                                const ClassHierarchy& h,
                                const CallGraph& prior,
                                const MethodId& edited);

struct MultiEntryResult {
    CallGraph graph;
    std::vector<TraversalState> runs; // one per entry, declaration order
};

/// Runs krab_build once per entry point and unions the graphs (exact
/// (caller, callee, site) duplicates collapse; the first run wins a
/// contested predecessor edge). Throws Error(NoEntryPoint) when the model
/// declares no main.
MultiEntryResult krab_multi_entry(const ProgramModel& model, const ClassHierarchy& h);

} // namespace minicg
