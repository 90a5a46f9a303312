#include "minicg/call_graph.hpp"

#include <algorithm>
#include <cassert>

#include <nlohmann/json.hpp>

namespace minicg {

void CallGraph::add_link(const MethodId& caller, const MethodId& callee, std::size_t site) {
    assert(nodes.count(caller) && "caller must already be a node");
    nodes.insert(caller);
    nodes.insert(callee);
    if (caller == callee) {
        self_loops.insert(caller);
        return;
    }
    call_edges.push_back({caller, callee, site});
}

std::vector<std::set<MethodId>> connected_components(const CallGraph& g) {
    // Union-find over the node set; call edges only, direction ignored.
    std::vector<MethodId> ids(g.nodes.begin(), g.nodes.end());
    std::map<MethodId, std::size_t> index;
    for (std::size_t i = 0; i < ids.size(); ++i)
        index[ids[i]] = i;

    std::vector<std::size_t> parent(ids.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& edge : g.call_edges)
        parent[find(index.at(edge.caller))] = find(index.at(edge.callee));

    std::map<std::size_t, std::set<MethodId>> groups;
    for (std::size_t i = 0; i < ids.size(); ++i)
        groups[find(i)].insert(ids[i]);

    std::vector<std::set<MethodId>> out;
    out.reserve(groups.size());
    for (auto& [root, members] : groups)
        out.push_back(std::move(members));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
    return out;
}

std::set<MethodId> reachable_from_entries(const CallGraph& g) {
    std::map<MethodId, std::vector<MethodId>> adjacent;
    for (const auto& edge : g.call_edges)
        adjacent[edge.caller].push_back(edge.callee);
    std::set<MethodId> seen;
    std::vector<MethodId> work(g.entries.begin(), g.entries.end());
    while (!work.empty()) {
        MethodId cur = std::move(work.back());
        work.pop_back();
        if (!seen.insert(cur).second)
            continue;
        auto it = adjacent.find(cur);
        if (it == adjacent.end())
            continue;
        for (const auto& next : it->second)
            work.push_back(next);
    }
    return seen;
}

std::set<MethodId> unreachable_methods(const ProgramModel& model, const CallGraph& g) {
    std::set<MethodId> reachable = reachable_from_entries(g);
    std::set<MethodId> out;
    for (const auto& id : model.all_methods())
        if (!reachable.count(id))
            out.insert(id);
    return out;
}

void restrict_to_reachable(CallGraph& g) {
    std::set<MethodId> reachable = reachable_from_entries(g);
    g.nodes = reachable;
    std::erase_if(g.call_edges,
                  [&](const CallEdge& e) { return !reachable.count(e.caller); });
    std::erase_if(g.self_loops,
                  [&](const MethodId& m) { return !reachable.count(m); });
    std::erase_if(g.predecessor_edges, [&](const auto& entry) {
        return !reachable.count(entry.first) || !reachable.count(entry.second);
    });
}

std::string export_dot(const CallGraph& g) {
    std::string out = "digraph callgraph {\n";
    for (const auto& node : g.nodes)
        out += "  \"" + node.str() + "\";\n";

    std::vector<CallEdge> edges = g.call_edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& edge : edges)
        out += "  \"" + edge.caller.str() + "\" -> \"" + edge.callee.str() + "\";\n";

    for (const auto& node : g.self_loops)
        out += "  \"" + node.str() + "\" -> \"" + node.str() + "\";\n";

    for (const auto& [child, parent] : g.predecessor_edges)
        out += "  \"" + child.str() + "\" -> \"" + parent.str() +
               "\" [style=dashed, role=pred];\n";

    out += "}\n";
    return out;
}

std::string export_json(const CallGraph& g) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const auto& node : g.nodes)
        j["nodes"].push_back(node.str());

    std::vector<CallEdge> edges = g.call_edges;
    std::sort(edges.begin(), edges.end());
    j["edges"] = nlohmann::json::array();
    for (const auto& edge : edges)
        j["edges"].push_back({{"caller", edge.caller.str()},
                              {"callee", edge.callee.str()},
                              {"site", edge.site}});

    j["self_loops"] = nlohmann::json::array();
    for (const auto& node : g.self_loops)
        j["self_loops"].push_back(node.str());

    j["entries"] = nlohmann::json::array();
    for (const auto& node : g.entries)
        j["entries"].push_back(node.str());

    return j.dump(2) + "\n";
}

bool graphs_equal(const CallGraph& a, const CallGraph& b) {
    if (a.nodes != b.nodes || a.self_loops != b.self_loops || a.entries != b.entries)
        return false;
    auto pairs = [](const CallGraph& g) {
        std::vector<std::pair<MethodId, MethodId>> out;
        out.reserve(g.call_edges.size());
        for (const auto& edge : g.call_edges)
            out.emplace_back(edge.caller, edge.callee);
        std::sort(out.begin(), out.end());
        return out;
    };
    return pairs(a) == pairs(b);
}

} // namespace minicg
