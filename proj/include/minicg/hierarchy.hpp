#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "minicg/model.hpp"

namespace minicg {

struct CallGraph;

/// Inheritance graph: parent link and direct-subclass sets, mutually
/// consistent and acyclic (the model invariants exclude cycles).
struct ClassHierarchy {
    std::map<std::string, std::optional<std::string>> parent;
    std::map<std::string, std::set<std::string>> children;
};

/// Set of class names observed instantiated in reachable code.
struct LiveTypeSet {
    std::set<std::string> classes;

    bool operator==(const LiveTypeSet&) const = default;
};

ClassHierarchy build_hierarchy(const ProgramModel& model);

/// The subtype cone: `class_name` plus all transitive subclasses,
/// lexicographically ordered. Throws Error(UnknownClass).
std::set<std::string> cone(const ClassHierarchy& h, const std::string& class_name);

/// Class-hierarchy dispatch for one call site.
///
/// Self receiver: the nearest definition of the target walking up from the
/// caller's class (always a single method). Local receiver with static type
/// T: for every class in cone(T), the implementation that class inherits or
/// declares, deduplicated and ordered.
///
/// When `live` is non-null, local-receiver targets are kept only if the cone
/// class the lookup started from is live (self calls are not filtered).
/// Throws Error(UnresolvedTarget) when no definition exists anywhere on the
/// relevant chain, before any live filtering.
std::set<MethodId> resolve_targets(const ProgramModel& model,
                                   const ClassHierarchy& h,
                                   const MethodId& caller,
                                   const CallSite& site,
                                   const LiveTypeSet* live = nullptr);

/// Least fixed point: classes instantiated in any method reachable from the
/// graph's entries (over directed call edges) are live.
LiveTypeSet propagate_live_types(const ProgramModel& model, const CallGraph& graph);

} // namespace minicg
