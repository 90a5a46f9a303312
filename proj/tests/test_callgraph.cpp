#include <doctest.h>

#include <map>
#include <optional>

#include "gen.hpp"
#include "minicg/call_graph.hpp"
#include "minicg/classic.hpp"
#include "minicg/frontend.hpp"

using namespace minicg;

namespace {

MethodId id(const char* text) { return MethodId::parse(text); }

CallGraph seeded(std::initializer_list<const char*> entries) {
    CallGraph g;
    for (const char* e : entries) {
        g.nodes.insert(id(e));
        g.entries.insert(id(e));
    }
    return g;
}

} // namespace

TEST_CASE("add_link grows the node set") {
    CallGraph g = seeded({"A.main"});
    g.add_link(id("A.main"), id("A.f"), 0);
    CHECK(g.nodes == std::set<MethodId>{id("A.f"), id("A.main")});
    REQUIRE(g.call_edges.size() == 1);
    CHECK(g.call_edges[0].caller == id("A.main"));
    CHECK(g.call_edges[0].callee == id("A.f"));
    CHECK(g.self_loops.empty());
}

TEST_CASE("self calls mark one self-loop, never a plain edge") {
    CallGraph g = seeded({"A.r"});
    g.add_link(id("A.r"), id("A.r"), 0);
    g.add_link(id("A.r"), id("A.r"), 1);
    CHECK(g.call_edges.empty());
    CHECK(g.self_loops == std::set<MethodId>{id("A.r")});
}

TEST_CASE("two sites to the same target are two edges") {
    CallGraph g = seeded({"A.main"});
    g.add_link(id("A.main"), id("A.f"), 0);
    g.add_link(id("A.main"), id("A.f"), 1);
    CHECK(g.call_edges.size() == 2);
}

TEST_CASE("connected components") {
    SUBCASE("empty graph") { CHECK(connected_components(CallGraph{}).empty()); }

    SUBCASE("two clusters") {
        CallGraph g = seeded({"A.main", "B.p"});
        g.add_link(id("A.main"), id("A.f"), 0);
        g.add_link(id("B.p"), id("B.q"), 0);
        auto comps = connected_components(g);
        REQUIRE(comps.size() == 2);
        CHECK(comps[0] == std::set<MethodId>{id("A.f"), id("A.main")});
        CHECK(comps[1] == std::set<MethodId>{id("B.p"), id("B.q")});
    }

    SUBCASE("chain is one component") {
        CallGraph g = seeded({"A.a"});
        g.add_link(id("A.a"), id("A.b"), 0);
        g.add_link(id("A.b"), id("A.c"), 0);
        g.add_link(id("A.c"), id("A.d"), 0);
        CHECK(connected_components(g).size() == 1);
    }

    SUBCASE("partition of the node set on random graphs") {
        for (std::uint64_t seed = 400; seed < 415; ++seed) {
            ProgramModel model = testsupport::random_program(seed);
            CallGraph g = classic_build(model).graph;
            auto comps = connected_components(g);
            std::set<MethodId> all;
            std::size_t total = 0;
            for (const auto& comp : comps) {
                total += comp.size();
                for (const auto& m : comp)
                    all.insert(m);
            }
            CHECK(total == all.size()); // pairwise disjoint
            CHECK(all == g.nodes);      // exhaustive
            for (std::size_t i = 1; i < comps.size(); ++i)
                CHECK(*comps[i - 1].begin() < *comps[i].begin());
        }
    }
}

TEST_CASE("unreachable methods") {
    SUBCASE("everything called from main") {
        ProgramModel model =
            parse_program("class A { def main() { f(); g(); } def f() { } def g() { } }");
        CallGraph g = classic_build(model).graph;
        CHECK(unreachable_methods(model, g).empty());
    }

    SUBCASE("one dead method") {
        ProgramModel model =
            parse_program("class A { def main() { f(); } def f() { } def d() { } }");
        CallGraph g = classic_build(model).graph;
        CHECK(unreachable_methods(model, g) == std::set<MethodId>{id("A.d")});
    }

    SUBCASE("reachable only through a dead method counts as dead") {
        ProgramModel model = parse_program(
            "class A { def main() { f(); } def f() { } def mid() { tail(); } "
            "def tail() { } }");
        CallGraph g = classic_build(model).graph;
        CHECK(unreachable_methods(model, g) ==
              std::set<MethodId>{id("A.mid"), id("A.tail")});
    }

    SUBCASE("agrees with an independent directed DFS") {
        for (std::uint64_t seed = 500; seed < 520; ++seed) {
            ProgramModel model = testsupport::random_program(seed);
            CallGraph g = classic_build(model).graph;

            std::map<MethodId, std::vector<MethodId>> adj;
            for (const auto& e : g.call_edges)
                adj[e.caller].push_back(e.callee);
            std::set<MethodId> seen;
            std::vector<MethodId> stack(g.entries.begin(), g.entries.end());
            while (!stack.empty()) {
                MethodId m = stack.back();
                stack.pop_back();
                if (!seen.insert(m).second)
                    continue;
                for (const auto& next : adj[m])
                    stack.push_back(next);
            }

            std::set<MethodId> dead = unreachable_methods(model, g);
            for (const auto& m : dead)
                CHECK(seen.count(m) == 0);
            for (const auto& m : model.all_methods())
                if (!dead.count(m))
                    CHECK(seen.count(m) == 1);
        }
    }
}

TEST_CASE("dot export") {
    SUBCASE("empty graph") { CHECK(export_dot(CallGraph{}) == "digraph callgraph {\n}\n"); }

    SUBCASE("single edge") {
        CallGraph g = seeded({"A.main"});
        g.add_link(id("A.main"), id("A.f"), 0);
        std::string dot = export_dot(g);
        CHECK(dot.find("\"A.main\" -> \"A.f\";") != std::string::npos);
        CHECK(dot.find("\"A.f\";") != std::string::npos);
    }

    SUBCASE("self-loop renders as an edge to self") {
        CallGraph g = seeded({"A.r"});
        g.add_link(id("A.r"), id("A.r"), 0);
        CHECK(export_dot(g).find("\"A.r\" -> \"A.r\";") != std::string::npos);
    }

    SUBCASE("predecessor edges are dashed and tagged") {
        CallGraph g = seeded({"A.main"});
        g.add_link(id("A.main"), id("A.f"), 0);
        g.predecessor_edges.emplace(id("A.f"), id("A.main"));
        CHECK(export_dot(g).find("\"A.f\" -> \"A.main\" [style=dashed, role=pred];") !=
              std::string::npos);
    }

    SUBCASE("distinct graphs serialize distinctly") {
        CallGraph g = seeded({"A.main"});
        g.add_link(id("A.main"), id("A.f"), 0);
        CallGraph extra = g;
        extra.add_link(id("A.main"), id("A.f"), 1);
        CallGraph looped = g;
        looped.add_link(id("A.f"), id("A.f"), 0);
        CHECK(export_dot(g) != export_dot(extra));
        CHECK(export_dot(g) != export_dot(looped));
        CHECK(export_json(g) != export_json(extra));
    }

    SUBCASE("insertion order does not leak into the bytes") {
        CallGraph a = seeded({"A.main"});
        a.add_link(id("A.main"), id("A.f"), 0);
        a.add_link(id("A.main"), id("A.g"), 1);

        CallGraph b = seeded({"A.main"});
        b.add_link(id("A.main"), id("A.g"), 1);
        b.add_link(id("A.main"), id("A.f"), 0);

        CHECK(export_dot(a) == export_dot(b));
        CHECK(export_json(a) == export_json(b));
    }
}

TEST_CASE("json export lists the four arrays sorted") {
    CallGraph g = seeded({"A.main"});
    g.add_link(id("A.main"), id("A.f"), 0);
    g.add_link(id("A.f"), id("A.f"), 0);
    std::string json = export_json(g);
    CHECK(json.find("\"nodes\"") != std::string::npos);
    CHECK(json.find("\"edges\"") != std::string::npos);
    CHECK(json.find("\"self_loops\"") != std::string::npos);
    CHECK(json.find("\"entries\"") != std::string::npos);
    CHECK(json.find("A.main") < json.find("\"self_loops\""));
}

TEST_CASE("graph equality") {
    CallGraph g = seeded({"A.main"});
    g.add_link(id("A.main"), id("A.f"), 0);
    CHECK(graphs_equal(g, g));

    CallGraph missing_edge = seeded({"A.main"});
    missing_edge.nodes.insert(id("A.f"));
    CHECK(!graphs_equal(g, missing_edge));

    SUBCASE("site indices do not participate") {
        CallGraph other = seeded({"A.main"});
        other.add_link(id("A.main"), id("A.f"), 7);
        CHECK(graphs_equal(g, other));
    }

    SUBCASE("predecessor edges do not participate") {
        CallGraph with_pred = g;
        with_pred.predecessor_edges.emplace(id("A.f"), id("A.main"));
        CHECK(graphs_equal(g, with_pred));
    }

    SUBCASE("multiplicity does participate") {
        CallGraph doubled = g;
        doubled.add_link(id("A.main"), id("A.f"), 1);
        CHECK(!graphs_equal(g, doubled));
    }

    SUBCASE("entries participate") {
        CallGraph other = g;
        other.entries.insert(id("A.f"));
        CHECK(!graphs_equal(g, other));
    }
}

TEST_CASE("invariants hold after arbitrary link sequences") {
    for (std::uint64_t seed = 600; seed < 610; ++seed) {
        ProgramModel model = testsupport::random_program(seed);
        CallGraph g = classic_build(model).graph;
        for (const auto& e : g.call_edges) {
            CHECK(g.nodes.count(e.caller) == 1);
            CHECK(g.nodes.count(e.callee) == 1);
            CHECK(e.caller != e.callee); // self calls never become plain edges
        }
        for (const auto& m : g.self_loops)
            CHECK(g.nodes.count(m) == 1);
    }
}
