// minicg — call-graph construction for MiniJ source files.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "minicg/bench.hpp"
#include "minicg/call_graph.hpp"
#include "minicg/classic.hpp"
#include "minicg/cost_model.hpp"
#include "minicg/diagnostics.hpp"
#include "minicg/frontend.hpp"
#include "minicg/hierarchy.hpp"
#include "minicg/krab.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSemantic = 2;
constexpr int kExitSkipFault = 3;
constexpr int kExitNoEntry = 4;
constexpr int kExitDisagree = 5;

int exit_code_for(const minicg::Error& e) {
    switch (e.code()) {
        case minicg::DiagCode::NoEntryPoint: return kExitNoEntry;
        case minicg::DiagCode::InvalidArgument: return kExitUsage;
        default: return kExitSemantic;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw minicg::Error(minicg::DiagCode::InvalidArgument,
                            "cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct AnalyzeOptions {
    std::string file;
    std::string algo;
    bool rta = false;
    std::string format = "dot";
    std::string entry;
    std::uint64_t inject_skip = 0;
};

struct IncrementalOptions {
    std::string file;
    std::string edit;
    std::string algo;
    std::string format = "dot";
    std::string entry;
};

void print_skip_fault(const minicg::SkipFault& fault) {
    std::cerr << "skip fault: " << fault.residual_frames.size()
              << " frame(s) never returned:";
    for (const auto& frame : fault.residual_frames)
        std::cerr << " " << frame.method.str();
    std::cerr << "\n";
}

nlohmann::json graph_json(const minicg::CallGraph& graph) {
    return nlohmann::json::parse(minicg::export_json(graph));
}

void print_graph_report(const minicg::ProgramModel& model,
                        const minicg::CallGraph& graph,
                        const std::string& format,
                        const std::vector<std::string>& extra_comments) {
    auto unreachable = minicg::unreachable_methods(model, graph);
    auto components = minicg::connected_components(graph);

    if (format == "json") {
        nlohmann::json j = graph_json(graph);
        j["unreachable"] = nlohmann::json::array();
        for (const auto& id : unreachable)
            j["unreachable"].push_back(id.str());
        j["components"] = nlohmann::json::array();
        for (const auto& component : components) {
            nlohmann::json members = nlohmann::json::array();
            for (const auto& id : component)
                members.push_back(id.str());
            j["components"].push_back(members);
        }
        std::cout << j.dump(2) << "\n";
        return;
    }

    std::cout << minicg::export_dot(graph);
    if (unreachable.empty()) {
        std::cout << "// unreachable: none\n";
    } else {
        std::cout << "// unreachable:";
        for (const auto& id : unreachable)
            std::cout << " " << id.str();
        std::cout << "\n";
    }
    std::cout << "// components: " << components.size() << "\n";
    std::size_t index = 1;
    for (const auto& component : components) {
        std::cout << "// component " << index++ << ":";
        for (const auto& id : component)
            std::cout << " " << id.str();
        std::cout << "\n";
    }
    for (const auto& line : extra_comments)
        std::cout << "// " << line << "\n";
}

int run_analyze(const AnalyzeOptions& opt) {
    if (opt.algo == "krab" && opt.rta) {
        std::cerr << "--rta applies to the classic algorithm only\n";
        return kExitUsage;
    }
    if (opt.algo == "classic" && opt.inject_skip > 0) {
        std::cerr << "--inject-skip applies to the krab algorithm only\n";
        return kExitUsage;
    }

    minicg::ProgramModel model = minicg::parse_program(read_file(opt.file));
    minicg::ClassHierarchy h = minicg::build_hierarchy(model);
    minicg::CallGraph graph;

    if (opt.algo == "classic") {
        minicg::ClassicResult result;
        if (!opt.entry.empty()) {
            std::vector<minicg::MethodId> entries{minicg::MethodId::parse(opt.entry)};
            result = minicg::classic_build(model, opt.rta, &entries);
        } else {
            result = minicg::classic_build(model, opt.rta);
        }
        for (const auto& pruned : result.pruned_sites) {
            std::cerr << "live-type pruning at " << pruned.caller.str() << " site #"
                      << pruned.site << ": hierarchy targets {";
            const char* sep = "";
            for (const auto& id : pruned.cha_targets) {
                std::cerr << sep << id.str();
                sep = ", ";
            }
            std::cerr << "} kept {";
            sep = "";
            for (const auto& id : pruned.live_targets) {
                std::cerr << sep << id.str();
                sep = ", ";
            }
            std::cerr << "}\n";
        }
        graph = std::move(result.graph);
        print_graph_report(model, graph, opt.format, {});
        return kExitOk;
    }

    // krab
    minicg::FaultHooks hooks{opt.inject_skip};
    const minicg::FaultHooks* hook_ptr = opt.inject_skip > 0 ? &hooks : nullptr;

    if (!opt.entry.empty()) {
        auto st = minicg::krab_build(model, h, minicg::MethodId::parse(opt.entry), hook_ptr);
        if (auto fault = minicg::validate_traversal(st)) {
            print_skip_fault(*fault);
            return kExitSkipFault;
        }
        graph = std::move(st.graph);
        print_graph_report(model, graph, opt.format, {});
        return kExitOk;
    }

    std::vector<minicg::MethodId> entries = minicg::find_entry_points(model);
    if (entries.empty())
        throw minicg::Error(minicg::DiagCode::NoEntryPoint,
                            "no method named 'main' declared");
    if (hook_ptr && entries.size() > 1) {
        std::cerr << "--inject-skip needs a single entry; pass --entry\n";
        return kExitUsage;
    }
    if (entries.size() == 1) {
        auto st = minicg::krab_build(model, h, entries.front(), hook_ptr);
        if (auto fault = minicg::validate_traversal(st)) {
            print_skip_fault(*fault);
            return kExitSkipFault;
        }
        graph = std::move(st.graph);
    } else {
        auto multi = minicg::krab_multi_entry(model, h);
        for (const auto& run : multi.runs) {
            if (auto fault = minicg::validate_traversal(run)) {
                print_skip_fault(*fault);
                return kExitSkipFault;
            }
        }
        graph = std::move(multi.graph);
    }
    print_graph_report(model, graph, opt.format, {});
    return kExitOk;
}

std::string counters_line(const char* label, const minicg::ClassicCounters& c) {
    std::ostringstream out;
    out << label << ": methods=" << c.methods_processed
        << " resolutions=" << c.resolutions << " reenqueues=" << c.reenqueues;
    return out.str();
}

std::string traversal_line(const char* label, const minicg::TraversalState& st) {
    std::ostringstream out;
    out << label << ": steps=" << st.steps << " weighted_steps=" << st.weighted_steps
        << " pushes=" << st.pushes << " pops=" << st.pops;
    return out.str();
}

int run_incremental(const IncrementalOptions& opt) {
    minicg::ProgramModel before = minicg::parse_program(read_file(opt.file));
    minicg::Delta delta = minicg::parse_delta(read_file(opt.edit));
    minicg::ProgramModel after = minicg::apply_edit(before, delta);
    minicg::ClassHierarchy h = minicg::build_hierarchy(after);

    std::vector<std::string> comments;
    minicg::CallGraph graph;

    if (opt.algo == "classic") {
        minicg::ClassicResult prior;
        if (!opt.entry.empty()) {
            std::vector<minicg::MethodId> entries{minicg::MethodId::parse(opt.entry)};
            prior = minicg::classic_build(before, false, &entries);
        } else {
            prior = minicg::classic_build(before);
        }
        minicg::ClassicResult incremental =
            minicg::classic_incremental(after, prior.graph, delta.method);
        std::vector<minicg::MethodId> entry_list(prior.graph.entries.begin(),
                                                 prior.graph.entries.end());
        minicg::ClassicResult rebuild = minicg::classic_build(after, false, &entry_list);
        comments.push_back(counters_line("incremental", incremental.counters));
        comments.push_back(counters_line("rebuild", rebuild.counters));
        graph = std::move(incremental.graph);
    } else {
        minicg::ClassHierarchy h_before = minicg::build_hierarchy(before);
        minicg::TraversalState incremental;
        minicg::TraversalState rebuild;
        if (!opt.entry.empty()) {
            minicg::MethodId entry = minicg::MethodId::parse(opt.entry);
            auto prior = minicg::krab_build(before, h_before, entry);
            incremental = minicg::krab_incremental(after, h, prior.graph, delta.method, entry);
            rebuild = minicg::krab_build(after, h, entry);
        } else {
            std::vector<minicg::MethodId> entries = minicg::find_entry_points(before);
            if (entries.empty())
                throw minicg::Error(minicg::DiagCode::NoEntryPoint,
                                    "no method named 'main' declared");
            if (entries.size() == 1) {
                auto prior = minicg::krab_build(before, h_before, entries.front());
                incremental = minicg::krab_incremental(after, h, prior.graph, delta.method,
                                                       entries.front());
                rebuild = minicg::krab_build(after, h, entries.front());
            } else {
                auto prior = minicg::krab_multi_entry(before, h_before);
                incremental = minicg::krab_incremental(after, h, prior.graph, delta.method);
                auto full = minicg::krab_multi_entry(after, h);
                rebuild.graph = full.graph;
                for (const auto& run : full.runs) {
                    rebuild.steps += run.steps;
                    rebuild.weighted_steps += run.weighted_steps;
                    rebuild.pushes += run.pushes;
                    rebuild.pops += run.pops;
                }
            }
        }
        comments.push_back(traversal_line("incremental", incremental));
        comments.push_back(traversal_line("rebuild", rebuild));
        graph = std::move(incremental.graph);
    }

    print_graph_report(after, graph, opt.format, comments);
    return kExitOk;
}

int run_check(const std::string& file, bool rta) {
    minicg::ProgramModel model = minicg::parse_program(read_file(file));
    minicg::ClassHierarchy h = minicg::build_hierarchy(model);

    minicg::ClassicResult classic = minicg::classic_build(model, rta);
    minicg::MultiEntryResult krab = minicg::krab_multi_entry(model, h);

    if (minicg::graphs_equal(classic.graph, krab.graph)) {
        std::cout << "graphs equivalent\n";
        return kExitOk;
    }
    std::cout << "graphs differ\n";
    std::cerr << "classic: " << classic.graph.nodes.size() << " nodes, "
              << classic.graph.call_edges.size() << " edges; krab: "
              << krab.graph.nodes.size() << " nodes, " << krab.graph.call_edges.size()
              << " edges\n";
    return kExitDisagree;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Call-graph construction toolkit for MiniJ"};
    app.require_subcommand(1);

    AnalyzeOptions analyze;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Build the call graph of a file");
    analyze_cmd->add_option("file", analyze.file, "MiniJ source file")->required();
    analyze_cmd->add_option("--algo", analyze.algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"krab", "classic"}));
    analyze_cmd->add_flag("--rta", analyze.rta, "Prune dispatch with live types (classic)");
    analyze_cmd->add_option("--format", analyze.format, "Output format")
        ->check(CLI::IsMember({"dot", "json"}));
    analyze_cmd->add_option("--entry", analyze.entry, "Entry point as Class.method");
    analyze_cmd->add_option("--inject-skip", analyze.inject_skip,
                            "Testing hook: suppress the first N pops")
        ->group("");

    IncrementalOptions incremental;
    CLI::App* incr_cmd =
        app.add_subcommand("incremental", "Apply a method patch and update the graph");
    incr_cmd->add_option("file", incremental.file, "MiniJ source file")->required();
    incr_cmd->add_option("--edit", incremental.edit, "Patch file (@@ Class.method header)")
        ->required();
    incr_cmd->add_option("--algo", incremental.algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"krab", "classic"}));
    incr_cmd->add_option("--format", incremental.format, "Output format")
        ->check(CLI::IsMember({"dot", "json"}));
    incr_cmd->add_option("--entry", incremental.entry, "Entry point as Class.method");

    std::vector<std::uint64_t> sizes = minicg::default_table_sizes();
    CLI::App* model_cmd = app.add_subcommand("model", "Print the analytic cost table as CSV");
    model_cmd->add_option("--sizes", sizes, "Call-count column values");

    std::vector<std::string> shape_names{"flat", "chain", "mixed"};
    std::vector<std::uint64_t> bench_sizes = minicg::default_table_sizes();
    std::uint64_t seed = 42;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Generate workloads and compare counters to the model");
    bench_cmd->add_option("--shapes", shape_names, "Workload shapes")
        ->check(CLI::IsMember({"flat", "chain", "mixed"}));
    bench_cmd->add_option("--sizes", bench_sizes, "Call counts");
    bench_cmd->add_option("--seed", seed, "Generator seed");

    std::string check_file;
    bool check_rta = false;
    CLI::App* check_cmd =
        app.add_subcommand("check", "Run both algorithms and compare the graphs");
    check_cmd->add_option("file", check_file, "MiniJ source file")->required();
    check_cmd->add_flag("--rta", check_rta,
                        "Give the classic side live-type pruning (documents the difference)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze_cmd)
            return run_analyze(analyze);
        if (*incr_cmd)
            return run_incremental(incremental);
        if (*model_cmd) {
            std::cout << minicg::cost_table_csv(minicg::cost_table(sizes));
            return kExitOk;
        }
        if (*bench_cmd) {
            std::vector<minicg::Shape> shapes;
            shapes.reserve(shape_names.size());
            for (const auto& name : shape_names)
                shapes.push_back(minicg::parse_shape(name));
            std::cout << minicg::bench_csv(minicg::run_bench(shapes, bench_sizes, seed));
            return kExitOk;
        }
        if (*check_cmd)
            return run_check(check_file, check_rta);
    } catch (const minicg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kExitUsage;
}
