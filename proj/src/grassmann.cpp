#include "cds/grassmann.hpp"

#include <algorithm>

namespace cds::grassmann {

std::vector<Chart> chart_cover(int n, int d) {
    if (d < 1 || d > n - 1) throw InputError("chart_cover: require 1 <= d <= n-1");
    std::vector<Chart> charts;
    std::vector<int> w0(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) w0[static_cast<size_t>(i)] = i;
    for (;;) {
        charts.push_back(chart_from_w0(n, w0));
        // next d-subset in lexicographic order
        int i = d - 1;
        while (i >= 0 && w0[static_cast<size_t>(i)] == n - d + i) --i;
        if (i < 0) break;
        ++w0[static_cast<size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            w0[static_cast<size_t>(j)] = w0[static_cast<size_t>(j - 1)] + 1;
    }
    return charts;
}

Chart chart_from_w0(int n, const std::vector<int>& w0) {
    Chart c;
    c.n = n;
    c.d = static_cast<int>(w0.size());
    c.w0 = w0;
    std::vector<char> used(static_cast<size_t>(n), 0);
    for (int i : w0) {
        if (i < 0 || i >= n || used[static_cast<size_t>(i)])
            throw InputError("chart_from_w0: invalid w0 index set");
        used[static_cast<size_t>(i)] = 1;
    }
    if (!std::is_sorted(w0.begin(), w0.end()))
        throw InputError("chart_from_w0: w0 indices must be increasing");
    for (int i = 0; i < n; ++i)
        if (!used[static_cast<size_t>(i)]) c.w1.push_back(i);
    return c;
}

std::string a_name(int i, int j) {
    return "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

VarsPtr chart_ring(const Chart& chart, const std::vector<std::string>& z_names) {
    std::vector<std::string> names;
    std::vector<int> block;
    if (!z_names.empty() && static_cast<int>(z_names.size()) != chart.n)
        throw InputError("chart_ring: z name count mismatch");
    for (int i = 0; i < chart.n; ++i) {
        names.push_back(z_names.empty() ? "z" + std::to_string(i + 1)
                                        : z_names[static_cast<size_t>(i)]);
        block.push_back(0);
    }
    for (int i = 0; i < chart.n - chart.d; ++i) {
        for (int j = 0; j < chart.d; ++j) {
            names.push_back(a_name(i, j));
            block.push_back(1);
        }
    }
    return make_vars(std::move(names), std::move(block));
}

size_t a_index(const Chart& chart, int i, int j) {
    return static_cast<size_t>(chart.n + i * chart.d + j);
}

}  // namespace cds::grassmann
