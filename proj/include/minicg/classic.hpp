#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "minicg/call_graph.hpp"
#include "minicg/hierarchy.hpp"
#include "minicg/model.hpp"

namespace minicg {

struct ClassicCounters {
    std::uint64_t methods_processed = 0; // worklist pulls
    std::uint64_t resolutions = 0;       // call-site resolutions performed
    std::uint64_t reenqueues = 0;        // enqueues of already-processed methods

    bool operator==(const ClassicCounters&) const = default;
};

/// A call site whose live-type refinement pruned the class-hierarchy target
/// set, reported so both sets stay visible.
struct PrunedSite {
    MethodId caller;
    std::size_t site = 0;
    std::set<MethodId> cha_targets;
    std::set<MethodId> live_targets;
};

struct ClassicResult {
    CallGraph graph;
    ClassicCounters counters;
    std::vector<PrunedSite> pruned_sites; // populated only with live types on
};

/// Entry points are all methods named "main", in declaration order.
std::vector<MethodId> find_entry_points(const ProgramModel& model);

/// Worklist construction: seed the entry points, pull FIFO, resolve each
/// pulled method's sites via the class hierarchy, link, and (with
/// `use_live_types`) re-run live-type propagation after each method and
/// re-enqueue methods whose target sets changed. Terminates because target
/// sets grow monotonically. An empty entry set yields an empty graph.
///
/// `entries_override`, when non-null, replaces entry-point discovery.
ClassicResult classic_build(const ProgramModel& model,
                            bool use_live_types = false,
                            const std::vector<MethodId>* entries_override = nullptr);

/// Updates `prior` (built with live types off from a model differing only in
/// `edited`'s body): strips the edited method's outgoing links, reprocesses
/// it plus any newly discovered methods, then drops everything no longer
/// reachable from the entries. Equal to a full rebuild under graphs_equal,
/// with strictly fewer methods processed whenever the edit is local.
ClassicResult classic_incremental(const ProgramModel& model,
                                  const CallGraph& prior,
                                  const MethodId& edited);

} // namespace minicg
