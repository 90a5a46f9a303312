#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minicg/classic.hpp"

namespace minicg {

/// Synthetic workload shapes:
///  - flat:  main holds n calls to n distinct empty methods (best case);
///  - chain: main -> f1 -> ... -> fn, one call per method (worst-case nesting);
///  - mixed: n call sites of which floor(ln n) head nested sub-chains and the
///    rest are flat, arranged pseudorandomly but reproducibly per seed.
enum class Shape { flat, chain, mixed };

const char* shape_name(Shape shape);
Shape parse_shape(const std::string& name); // throws Error(InvalidArgument)

/// Emits MiniJ source with exactly n call sites reachable from main.
/// Requires n >= 1. Identical (shape, n, seed) yields identical bytes.
std::string generate_program(Shape shape, std::uint64_t n, std::uint64_t seed);

struct BenchRow {
    Shape shape = Shape::flat;
    std::uint64_t n = 0;
    std::uint64_t steps = 0;
    std::uint64_t weighted_steps = 0;
    double model_value = 0.0; // k_b for flat, k_w for chain, k_a for mixed
    ClassicCounters classic;
};

struct BenchReport {
    std::vector<BenchRow> rows; // one per (shape, n), input order
};

/// Generates, runs both algorithms, and pairs the measured counters with the
/// matching cost-model value.
BenchReport run_bench(const std::vector<Shape>& shapes,
                      const std::vector<std::uint64_t>& sizes,
                      std::uint64_t seed);

/// CSV with header
/// "shape,n,steps,weighted_steps,model,classic_methods,classic_resolutions,classic_reenqueues".
std::string bench_csv(const BenchReport& report);

} // namespace minicg
