#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "minicg/model.hpp"

namespace minicg {

struct CallEdge {
    MethodId caller;
    MethodId callee;
    std::size_t site = 0; // call-site index within the caller

    auto operator<=>(const CallEdge&) const = default;
};

/// Method-level call graph shared by both construction algorithms.
///
/// Call edges form a multigraph keyed by call site; a direct self call is
/// recorded once as a self-loop marker instead of a plain edge. Predecessor
/// edges are the return links of the stack traversal (child -> parent in the
/// traversal tree, at most one per child); they are excluded from semantic
/// equality.
struct CallGraph {
    std::set<MethodId> nodes;
    std::vector<CallEdge> call_edges;
    std::set<MethodId> self_loops;
    std::map<MethodId, MethodId> predecessor_edges; // child -> parent
    std::set<MethodId> entries;

    /// Records a call from `caller` (already a node) to `callee` (added if
    /// absent). caller == callee sets the self-loop marker, idempotently.
    void add_link(const MethodId& caller, const MethodId& callee, std::size_t site);
};

/// Weakly connected components over call edges (direction ignored),
/// ordered by smallest member.
std::vector<std::set<MethodId>> connected_components(const CallGraph& g);

/// Methods reachable from the graph's entries via directed call edges,
/// entries included.
std::set<MethodId> reachable_from_entries(const CallGraph& g);

/// Declared methods not reachable from the graph's entries via directed
/// call edges. Entries themselves count as reachable.
std::set<MethodId> unreachable_methods(const ProgramModel& model, const CallGraph& g);

/// Drops nodes not reachable from the entries via directed call edges,
/// along with their edges, self-loops and predecessor links.
void restrict_to_reachable(CallGraph& g);

/// Deterministic DOT rendering: nodes as "Class.method", call edges solid,
/// self-loops as edges to self, predecessor edges dashed with role=pred.
/// Byte-identical for identical graph contents.
std::string export_dot(const CallGraph& g);

/// Deterministic JSON dump with lexicographically sorted nodes, edges,
/// self_loops and entries arrays.
std::string export_json(const CallGraph& g);

/// Semantic equality: nodes, call-edge multisets ignoring site indices,
/// self-loops and entries. Predecessor edges are traversal artifacts and
/// do not participate.
bool graphs_equal(const CallGraph& a, const CallGraph& b);

} // namespace minicg
