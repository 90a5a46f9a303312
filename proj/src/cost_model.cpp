#include "minicg/cost_model.hpp"

#include <cmath>
#include <cstdio>

namespace minicg {

std::uint64_t classical_cost(std::uint64_t n) {
    return n * n + 2 * n;
}

double krab_cost(std::uint64_t n, KrabCase which) {
    switch (which) {
        case KrabCase::worst:
            return static_cast<double>(n * n);
        case KrabCase::best:
            return static_cast<double>(n);
        case KrabCase::average:
            if (n == 0)
                return 0.0;
            return static_cast<double>(n) * std::log(static_cast<double>(n));
    }
    return 0.0;
}

std::vector<std::uint64_t> default_table_sizes() {
    return {200, 400, 600, 800, 1000};
}

std::vector<CostRow> cost_table(const std::vector<std::uint64_t>& sizes) {
    std::vector<CostRow> rows;
    rows.reserve(sizes.size());
    for (std::uint64_t n : sizes) {
        CostRow row;
        row.n = n;
        row.f_n = classical_cost(n);
        row.k_w = n * n;
        row.k_a = krab_cost(n, KrabCase::average);
        row.k_b = n;
        rows.push_back(row);
    }
    return rows;
}

std::string cost_table_csv(const std::vector<CostRow>& rows) {
    std::string out = "n,f,kw,ka,kb\n";
    char line[160];
    for (const CostRow& row : rows) {
        std::snprintf(line, sizeof line, "%llu,%llu,%llu,%.3f,%llu\n",
                      static_cast<unsigned long long>(row.n),
                      static_cast<unsigned long long>(row.f_n),
                      static_cast<unsigned long long>(row.k_w), row.k_a,
                      static_cast<unsigned long long>(row.k_b));
        out += line;
    }
    return out;
}

} // namespace minicg
