#include "minicg/bench.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "minicg/cost_model.hpp"
#include "minicg/diagnostics.hpp"
#include "minicg/frontend.hpp"
#include "minicg/krab.hpp"

namespace minicg {

const char* shape_name(Shape shape) {
    switch (shape) {
        case Shape::flat: return "flat";
        case Shape::chain: return "chain";
        case Shape::mixed: return "mixed";
    }
    return "?";
}

Shape parse_shape(const std::string& name) {
    if (name == "flat")
        return Shape::flat;
    if (name == "chain")
        return Shape::chain;
    if (name == "mixed")
        return Shape::mixed;
    throw Error(DiagCode::InvalidArgument, "unknown shape '" + name + "'");
}

namespace {

std::string num(std::uint64_t v) {
    return std::to_string(v);
}

// std::uniform_int_distribution is not bit-stable across standard library
// implementations; plain modulo keeps generated programs reproducible.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

std::string generate_flat(std::uint64_t n) {
    std::string out = "class Flat {\n  def main() {\n";
    for (std::uint64_t i = 1; i <= n; ++i)
        out += "    f" + num(i) + "();\n";
    out += "  }\n";
    for (std::uint64_t i = 1; i <= n; ++i)
        out += "  def f" + num(i) + "() { }\n";
    out += "}\n";
    return out;
}

std::string generate_chain(std::uint64_t n) {
    std::string out = "class Chain {\n  def main() {\n    f1();\n  }\n";
    for (std::uint64_t i = 1; i <= n; ++i) {
        out += "  def f" + num(i) + "() {";
        if (i < n)
            out += "\n    f" + num(i + 1) + "();\n  ";
        else
            out += " ";
        out += "}\n";
    }
    out += "}\n";
    return out;
}

// floor(ln n) call sites in main head sub-chains; the rest call empty leaf
// methods. Chain lengths and the order of main's sites are seeded.
std::string generate_mixed(std::uint64_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto heads =
        static_cast<std::uint64_t>(std::floor(std::log(static_cast<double>(n))));

    std::vector<std::uint64_t> chain_len(heads, 0);
    std::uint64_t chained = 0;
    if (heads > 0) {
        const std::uint64_t cap = std::max<std::uint64_t>(2, n / (2 * heads));
        for (auto& len : chain_len) {
            len = 2 + (cap > 2 ? pick(rng, cap - 1) : 0); // in [2, cap]
            chained += len;
        }
    }
    const std::uint64_t flats = n - chained;

    // main's call sites: one per chain head, one per flat leaf, shuffled.
    std::vector<std::string> sites;
    for (std::uint64_t c = 0; c < heads; ++c)
        sites.push_back("c" + num(c + 1) + "_1");
    for (std::uint64_t i = 1; i <= flats; ++i)
        sites.push_back("f" + num(i));
    for (std::size_t i = sites.size(); i > 1; --i)
        std::swap(sites[i - 1], sites[pick(rng, i)]);

    std::string out = "class Mixed {\n  def main() {\n";
    for (const auto& site : sites)
        out += "    " + site + "();\n";
    out += "  }\n";
    for (std::uint64_t c = 0; c < heads; ++c) {
        for (std::uint64_t j = 1; j <= chain_len[c]; ++j) {
            out += "  def c" + num(c + 1) + "_" + num(j) + "() {";
            if (j < chain_len[c])
                out += "\n    c" + num(c + 1) + "_" + num(j + 1) + "();\n  ";
            else
                out += " ";
            out += "}\n";
        }
    }
    for (std::uint64_t i = 1; i <= flats; ++i)
        out += "  def f" + num(i) + "() { }\n";
    out += "}\n";
    return out;
}

} // namespace

std::string generate_program(Shape shape, std::uint64_t n, std::uint64_t seed) {
    if (n < 1)
        throw Error(DiagCode::InvalidArgument, "program size must be at least 1");
    switch (shape) {
        case Shape::flat: return generate_flat(n);
        case Shape::chain: return generate_chain(n);
        case Shape::mixed: return generate_mixed(n, seed);
    }
    return {};
}

BenchReport run_bench(const std::vector<Shape>& shapes,
                      const std::vector<std::uint64_t>& sizes,
                      std::uint64_t seed) {
    BenchReport report;
    for (Shape shape : shapes) {
        for (std::uint64_t n : sizes) {
            ProgramModel model = parse_program(generate_program(shape, n, seed));
            ClassHierarchy h = build_hierarchy(model);
            MethodId entry = find_entry_points(model).at(0);

            TraversalState st = krab_build(model, h, entry);
            ClassicResult classic = classic_build(model);

            BenchRow row;
            row.shape = shape;
            row.n = n;
            row.steps = st.steps;
            row.weighted_steps = st.weighted_steps;
            switch (shape) {
                case Shape::flat: row.model_value = krab_cost(n, KrabCase::best); break;
                case Shape::chain: row.model_value = krab_cost(n, KrabCase::worst); break;
                case Shape::mixed: row.model_value = krab_cost(n, KrabCase::average); break;
            }
            row.classic = classic.counters;
            report.rows.push_back(row);
        }
    }
    return report;
}

std::string bench_csv(const BenchReport& report) {
    std::string out =
        "shape,n,steps,weighted_steps,model,classic_methods,classic_resolutions,"
        "classic_reenqueues\n";
    char line[256];
    for (const BenchRow& row : report.rows) {
        char model_text[48];
        if (row.shape == Shape::mixed)
            std::snprintf(model_text, sizeof model_text, "%.3f", row.model_value);
        else
            std::snprintf(model_text, sizeof model_text, "%llu",
                          static_cast<unsigned long long>(row.model_value));
        std::snprintf(line, sizeof line, "%s,%llu,%llu,%llu,%s,%llu,%llu,%llu\n",
                      shape_name(row.shape), static_cast<unsigned long long>(row.n),
                      static_cast<unsigned long long>(row.steps),
                      static_cast<unsigned long long>(row.weighted_steps), model_text,
                      static_cast<unsigned long long>(row.classic.methods_processed),
                      static_cast<unsigned long long>(row.classic.resolutions),
                      static_cast<unsigned long long>(row.classic.reenqueues));
        out += line;
    }
    return out;
}

} // namespace minicg
