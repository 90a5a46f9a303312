#include <doctest.h>

#include "gen.hpp"
#include "minicg/classic.hpp"
#include "minicg/diagnostics.hpp"
#include "minicg/frontend.hpp"
#include "oracle.hpp"

using namespace minicg;

namespace {

const char* kP1 = "class P { def main() { f(); g(); } def f() { } def g() { } }";

MethodId id(const char* text) { return MethodId::parse(text); }

} // namespace

TEST_CASE("entry point discovery") {
    CHECK(find_entry_points(parse_program("class A { def main() { } }")) ==
          std::vector<MethodId>{id("A.main")});
    CHECK(find_entry_points(parse_program("class A { def f() { } }")).empty());
    CHECK(find_entry_points(parse_program(
              "class A { def main() { } } class B { def main() { } }")) ==
          std::vector<MethodId>{id("A.main"), id("B.main")});
}

TEST_CASE("single method program") {
    ClassicResult r = classic_build(parse_program("class A { def main() { } }"));
    CHECK(r.graph.nodes == std::set<MethodId>{id("A.main")});
    CHECK(r.graph.call_edges.empty());
    CHECK(r.counters.methods_processed == 1);
    CHECK(r.counters.resolutions == 0);
    CHECK(r.counters.reenqueues == 0);
}

TEST_CASE("two calls from main") {
    ClassicResult r = classic_build(parse_program(kP1));
    CHECK(r.graph.nodes ==
          std::set<MethodId>{id("P.f"), id("P.g"), id("P.main")});
    REQUIRE(r.graph.call_edges.size() == 2);
    CHECK(r.counters.methods_processed == 3);
}

TEST_CASE("no entry points means an empty graph") {
    ClassicResult r = classic_build(parse_program("class A { def f() { } }"));
    CHECK(r.graph.nodes.empty());
    CHECK(r.counters.methods_processed == 0);
}

TEST_CASE("live types prune never-instantiated dispatch targets") {
    const char* text =
        "class A { def m() { } }\n"
        "class B extends A { def m() { } }\n"
        "class C extends B { def m() { } }\n"
        "class Host { def main() { var x: B; new B; x.m(); } }\n";
    ProgramModel model = parse_program(text);

    ClassicResult plain = classic_build(model, false);
    bool has_c = false;
    for (const auto& e : plain.graph.call_edges)
        if (e.callee == id("C.m"))
            has_c = true;
    CHECK(has_c); // pure hierarchy dispatch includes C.m

    ClassicResult refined = classic_build(model, true);
    for (const auto& e : refined.graph.call_edges)
        CHECK(e.callee != id("C.m"));
    CHECK(refined.graph.nodes.count(id("B.m")) == 1);

    REQUIRE(refined.pruned_sites.size() == 1);
    CHECK(refined.pruned_sites[0].caller == id("Host.main"));
    CHECK(refined.pruned_sites[0].cha_targets ==
          std::set<MethodId>{MethodId{"B", "m"}, MethodId{"C", "m"}});
    CHECK(refined.pruned_sites[0].live_targets == std::set<MethodId>{{"B", "m"}});
}

TEST_CASE("live-type growth re-enqueues affected methods") {
    // main's dispatch site resolves to nothing until f's instantiation of B
    // becomes reachable, so main has to be processed twice.
    const char* text =
        "class A { def m() { } }\n"
        "class B extends A { def m() { } }\n"
        "class Host { def main() { f(); var x: A; x.m(); } def f() { new B; } }\n";
    ProgramModel model = parse_program(text);
    ClassicResult r = classic_build(model, true);

    CHECK(r.counters.reenqueues >= 1);
    bool main_to_bm = false;
    for (const auto& e : r.graph.call_edges) {
        CHECK(e.callee != id("A.m")); // A never instantiated
        if (e.caller == id("Host.main") && e.callee == id("B.m"))
            main_to_bm = true;
    }
    CHECK(main_to_bm);
}

TEST_CASE("unresolved targets abort the build") {
    ProgramModel model =
        parse_program("class A { def main() { var x: A; x.ghost(); } def f() { } }");
    CHECK_THROWS_AS((void)classic_build(model), Error);
}

TEST_CASE("recursion terminates") {
    ProgramModel model = parse_program(
        "class A { def main() { r(); } def r() { r(); } }");
    ClassicResult r = classic_build(model);
    CHECK(r.graph.self_loops == std::set<MethodId>{id("A.r")});
    CHECK(r.counters.methods_processed == 2);
}

TEST_CASE("matches the brute-force oracle on random programs") {
    for (std::uint64_t seed = 700; seed < 750; ++seed) {
        ProgramModel model = testsupport::random_program(seed);
        ClassicResult r = classic_build(model);
        CallGraph expected = testsupport::oracle_build(model, find_entry_points(model));
        CHECK(graphs_equal(r.graph, expected));
    }
}

TEST_CASE("incremental: identical body") {
    ProgramModel model = parse_program(kP1);
    ClassicResult prior = classic_build(model);

    Delta noop;
    noop.method = id("P.f");
    ProgramModel edited = apply_edit(model, noop); // f was already empty

    ClassicResult incr = classic_incremental(edited, prior.graph, noop.method);
    CHECK(graphs_equal(incr.graph, prior.graph));
    CHECK(incr.counters.methods_processed == 1);
}

TEST_CASE("incremental: added call") {
    ProgramModel model = parse_program(
        "class P { def main() { f(); g(); } def f() { } def g() { } def h() { } }");
    ClassicResult prior = classic_build(model);
    CHECK(prior.counters.methods_processed == 3); // h unreachable

    Delta delta = parse_delta("@@ P.main\ndef main() { f(); g(); h(); }\n");
    ProgramModel edited = apply_edit(model, delta);

    ClassicResult incr = classic_incremental(edited, prior.graph, delta.method);
    ClassicResult rebuild = classic_build(edited);
    CHECK(graphs_equal(incr.graph, rebuild.graph));
    CHECK(incr.graph.nodes.count(id("P.h")) == 1);
    // main plus the newly reachable h; the rebuild touches all four
    CHECK(incr.counters.methods_processed == 2);
    CHECK(rebuild.counters.methods_processed == 4);
}

TEST_CASE("incremental: removed call strands the callee") {
    ProgramModel model = parse_program(
        "class P { def main() { f(); } def f() { g(); } def g() { } }");
    ClassicResult prior = classic_build(model);

    Delta delta = parse_delta("@@ P.f\ndef f() { }\n");
    ProgramModel edited = apply_edit(model, delta);

    ClassicResult incr = classic_incremental(edited, prior.graph, delta.method);
    ClassicResult rebuild = classic_build(edited);
    CHECK(graphs_equal(incr.graph, rebuild.graph));
    CHECK(incr.graph.nodes.count(id("P.g")) == 0);
    CHECK(unreachable_methods(edited, incr.graph) == std::set<MethodId>{id("P.g")});
}

TEST_CASE("incremental: unknown method") {
    ProgramModel model = parse_program(kP1);
    ClassicResult prior = classic_build(model);
    CHECK_THROWS_AS((void)classic_incremental(model, prior.graph, id("B.x")), Error);
}

TEST_CASE("incremental equals rebuild on random single edits") {
    for (std::uint64_t seed = 800; seed < 840; ++seed) {
        ProgramModel model = testsupport::random_program(seed);
        ClassicResult prior = classic_build(model);
        Delta delta = testsupport::random_edit(model, seed * 31 + 7);
        ProgramModel edited = apply_edit(model, delta);

        ClassicResult incr = classic_incremental(edited, prior.graph, delta.method);
        ClassicResult rebuild = classic_build(edited);
        CHECK(graphs_equal(incr.graph, rebuild.graph));
    }
}

TEST_CASE("explicit entry override") {
    ProgramModel model = parse_program(
        "class A { def main() { f(); } def f() { } def alt() { f(); f(); } }");
    std::vector<MethodId> entries{id("A.alt")};
    ClassicResult r = classic_build(model, false, &entries);
    CHECK(r.graph.entries == std::set<MethodId>{id("A.alt")});
    CHECK(r.graph.nodes == std::set<MethodId>{id("A.alt"), id("A.f")});
    CHECK(r.graph.call_edges.size() == 2);

    std::vector<MethodId> ghost{id("A.ghost")};
    CHECK_THROWS_AS((void)classic_build(model, false, &ghost), Error);
}
