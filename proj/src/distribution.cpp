#include "cds/distribution.hpp"

namespace cds::dist {

std::vector<Polynomial> symbolic_form_row(const grassmann::Chart& chart,
                                          const VarsPtr& chart_vars, int i) {
    if (i < 0 || i >= chart.n - chart.d)
        throw InputError("symbolic_form_row: form index out of range");
    std::vector<Polynomial> row(chart_vars->names.size(), Polynomial::zero(chart_vars));
    row[static_cast<size_t>(chart.w1[static_cast<size_t>(i)])] =
        Polynomial::constant(chart_vars, GaussRat(1));
    for (int j = 0; j < chart.d; ++j) {
        size_t aij = grassmann::a_index(chart, i, j);
        row[static_cast<size_t>(chart.w0[static_cast<size_t>(j)])] =
            -Polynomial::variable(chart_vars, aij);
    }
    return row;
}

}  // namespace cds::dist
