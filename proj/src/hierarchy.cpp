#include "minicg/hierarchy.hpp"

#include "minicg/call_graph.hpp"
#include "minicg/diagnostics.hpp"

namespace minicg {

ClassHierarchy build_hierarchy(const ProgramModel& model) {
    ClassHierarchy h;
    for (const auto& cls : model.classes) {
        h.parent[cls.name] = cls.superclass;
        h.children[cls.name]; // ensure every class has an entry
    }
    for (const auto& cls : model.classes)
        if (cls.superclass)
            h.children[*cls.superclass].insert(cls.name);
    return h;
}

std::set<std::string> cone(const ClassHierarchy& h, const std::string& class_name) {
    if (!h.parent.count(class_name))
        throw Error(DiagCode::UnknownClass, "no class '" + class_name + "'");
    std::set<std::string> out;
    std::vector<std::string> work{class_name};
    while (!work.empty()) {
        std::string cur = std::move(work.back());
        work.pop_back();
        if (!out.insert(cur).second)
            continue;
        for (const auto& child : h.children.at(cur))
            work.push_back(child);
    }
    return out;
}

namespace {

// Nearest definition of `name` walking up from `cls`.
std::optional<MethodId> lookup(const ProgramModel& model, const ClassHierarchy& h,
                               const std::string& cls, const std::string& name) {
    std::optional<std::string> cur = cls;
    while (cur) {
        const ClassDecl* decl = model.find_class(*cur);
        if (decl && decl->find_method(name))
            return MethodId{*cur, name};
        cur = h.parent.at(*cur);
    }
    return std::nullopt;
}

} // namespace

std::set<MethodId> resolve_targets(const ProgramModel& model,
                                   const ClassHierarchy& h,
                                   const MethodId& caller,
                                   const CallSite& site,
                                   const LiveTypeSet* live) {
    if (!site.receiver) {
        auto target = lookup(model, h, caller.class_name, site.target);
        if (!target)
            throw Error(DiagCode::UnresolvedTarget,
                        "no definition of '" + site.target + "' reachable from '" +
                            caller.str() + "' (site #" + std::to_string(site.index) + ")");
        return {*target};
    }

    const MethodDecl* decl = model.find_method(caller);
    if (!decl)
        throw Error(DiagCode::UnknownMethod, "no method '" + caller.str() + "'");
    auto local = decl->locals.find(*site.receiver);
    if (local == decl->locals.end())
        throw Error(DiagCode::UndeclaredLocal,
                    "call receiver '" + *site.receiver + "' is not a local of '" +
                        caller.str() + "'");

    std::set<MethodId> unfiltered;
    std::set<MethodId> out;
    for (const auto& cls : cone(h, local->second)) {
        auto target = lookup(model, h, cls, site.target);
        if (!target)
            continue;
        unfiltered.insert(*target);
        if (!live || live->classes.count(cls))
            out.insert(*target);
    }
    if (unfiltered.empty())
        throw Error(DiagCode::UnresolvedTarget,
                    "no definition of '" + site.target + "' in the cone of '" +
                        local->second + "' at '" + caller.str() + "' (site #" +
                        std::to_string(site.index) + ")");
    return out;
}

LiveTypeSet propagate_live_types(const ProgramModel& model, const CallGraph& graph) {
    LiveTypeSet live;
    for (const auto& id : reachable_from_entries(graph))
        if (const MethodDecl* decl = model.find_method(id))
            live.classes.insert(decl->instantiations.begin(), decl->instantiations.end());
    return live;
}

} // namespace minicg
