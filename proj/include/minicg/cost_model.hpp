#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minicg {

enum class KrabCase { worst, average, best };

/// Iterations of the worklist algorithm for n function calls: n^2 + 2n.
std::uint64_t classical_cost(std::uint64_t n);

/// Iterations of the stack traversal: n^2 (worst), n (best), n*ln(n)
/// (average; 0 for n = 0 and n = 1).
double krab_cost(std::uint64_t n, KrabCase which);

/// One row of the analytic comparison table.
struct CostRow {
    std::uint64_t n = 0;
    std::uint64_t f_n = 0; // classical, n^2 + 2n
    std::uint64_t k_w = 0; // n^2
    double k_a = 0.0;      // n*ln(n)
    std::uint64_t k_b = 0; // n

    bool operator==(const CostRow&) const = default;
};

std::vector<std::uint64_t> default_table_sizes(); // 200, 400, 600, 800, 1000

std::vector<CostRow> cost_table(const std::vector<std::uint64_t>& sizes);

/// CSV with header "n,f,kw,ka,kb"; ka printed with 3 decimal places.
std::string cost_table_csv(const std::vector<CostRow>& rows);

} // namespace minicg
