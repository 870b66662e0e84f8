#pragma once

#include "cds/grassmann.hpp"

namespace cds::dist {

// The canonical plane distribution on C^n x G(d,n), per chart: the n-d
// analytic 1-forms  dz_{w1[i]} - sum_j a[i][j] dz_{w0[j]},  i in w1 order.
// Their common kernel at (z, W) is W x T_W G(d,n). The forms involve no
// da-coordinates, so they are stored as coefficient rows over the chart.
struct DistributionForms {
    grassmann::Chart chart;
};

inline DistributionForms forms_for_chart(const grassmann::Chart& chart) {
    return DistributionForms{chart};
}

template <typename Scalar>
struct TangentVector {
    std::vector<Scalar> z_part;                 // length n
    std::vector<std::vector<Scalar>> a_part;    // (n-d) x d, unconstrained
};

// Entry i = v.z[w1[i]] - sum_j a[i][j] v.z[w0[j]]; the all-zero output
// characterizes v in H(z, W).
template <typename Scalar>
std::vector<Scalar> evaluate_form(const DistributionForms& F,
                                  const grassmann::PlaneMatrix<Scalar>& point_a,
                                  const TangentVector<Scalar>& v) {
    const auto& chart = F.chart;
    if (!(point_a.chart == chart)) throw InputError("evaluate_form: chart mismatch");
    if (static_cast<int>(v.z_part.size()) != chart.n)
        throw InputError("evaluate_form: tangent vector dimension mismatch");
    std::vector<Scalar> out;
    out.reserve(chart.w1.size());
    for (size_t i = 0; i < chart.w1.size(); ++i) {
        Scalar acc = v.z_part[static_cast<size_t>(chart.w1[i])];
        for (int j = 0; j < chart.d; ++j)
            acc = acc - point_a.a[i][static_cast<size_t>(j)] *
                            v.z_part[static_cast<size_t>(chart.w0[j])];
        out.push_back(std::move(acc));
    }
    return out;
}

// Form i as a coefficient row over the chart ring variables: -a_ij at the
// w0[j] z-slots, 1 at the w1[i] z-slot, zero on every a-slot. Width is the
// full chart ring so the row stacks directly under Jacobians.
std::vector<Polynomial> symbolic_form_row(const grassmann::Chart& chart,
                                          const VarsPtr& chart_vars, int i);

}  // namespace cds::dist
