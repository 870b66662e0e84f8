#include "cds/integrality.hpp"

#include <algorithm>

#include "cds/distribution.hpp"

namespace cds::integrality {

using grassmann::Chart;

ChartSubvariety make_subvariety(const Chart& chart, Ideal ideal) {
    size_t expect = static_cast<size_t>(chart.n + chart.d * (chart.n - chart.d));
    if (ideal.nvars() != expect)
        throw InputError("make_subvariety: ideal variable count does not match chart shape");
    if (contains_one(ideal)) throw InputError("make_subvariety: ideal is <1>");
    ChartSubvariety Z;
    Z.chart = chart;
    Z.chart_vars = ideal.vars();
    Z.ideal = std::move(ideal);
    return Z;
}

ChartSubvariety from_conormal(const conormal::ConormalChartIdeal& C) {
    ChartSubvariety Z;
    Z.chart = C.chart;
    Z.chart_vars = C.chart_vars;
    Z.ideal = C.ideal;
    return Z;
}

Ideal projection_ideal(const ChartSubvariety& Z) {
    int n = Z.chart.n;
    size_t total = Z.chart_vars->size();
    std::vector<uint8_t> drop(total, 0);
    for (size_t i = static_cast<size_t>(n); i < total; ++i) drop[i] = 1;
    Ideal elim = eliminate(Z.ideal, drop);
    std::vector<uint8_t> keep(total, 0);
    std::vector<std::string> z_names(Z.chart_vars->names.begin(),
                                     Z.chart_vars->names.begin() + n);
    for (int i = 0; i < n; ++i) keep[static_cast<size_t>(i)] = 1;
    return restrict_ideal(elim, keep, make_vars(std::move(z_names)));
}

namespace {

// f in sqrt(I : M^infty), M generated by hs (all of which avoid sqrt(I)
// trivialities is the caller's concern): membership must hold against every
// generator since I : M^infty is the intersection of the I : h^infty.
bool sat_radical_member(const Polynomial& f, const Ideal& I,
                        const std::vector<Polynomial>& hs,
                        const std::vector<Polynomial>& gb, const MonomialOrder& ord) {
    if (normal_form(f, gb, ord).is_zero()) return true;
    if (radical_membership(f, I)) return true;
    for (const auto& h : hs)
        if (!saturation_radical_membership(f, I, h)) return false;
    return true;
}

}  // namespace

IntegralityVerdict check_integral(const ChartSubvariety& Z) {
    IntegralityVerdict v;
    const Chart& chart = Z.chart;
    size_t N = Z.chart_vars->size();
    v.dim_Z = ideal_dimension(Z.ideal);
    size_t r = N - static_cast<size_t>(v.dim_Z);

    if (r == 0) {  // Z is the whole chart; its tangent space is never inside H
        v.is_integral = false;
        v.witness = "Z equals the ambient chart";
        return v;
    }

    std::vector<uint8_t> all(N, 1);
    PolyMatrix J = jacobian(Z.ideal, all);
    size_t rows = J.size();
    if (rows < r) throw InputError("check_integral: fewer generators than codimension");

    std::vector<Polynomial> M;
    for (auto& m : minors(J, r))
        if (!m.is_zero()) M.push_back(std::move(m));
    bool any_smooth = false;
    std::vector<Polynomial> hs;  // minor generators that do not vanish on Z
    for (const auto& m : M) {
        if (!radical_membership(m, Z.ideal)) {
            any_smooth = true;
            hs.push_back(m);
        }
    }
    if (!any_smooth)
        throw EmptySmoothLocus("check_integral: Jacobian minors all vanish on Z");

    auto ord = MonomialOrder::grevlex();
    const auto& gb = Z.ideal.basis(ord);

    // row subsets of J of size r, stacked over each form row
    std::vector<size_t> idx(r);
    for (size_t i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
        PolyMatrix base;
        for (size_t i : idx) base.push_back(J[i]);
        for (int fi = 0; fi < chart.n - chart.d && v.witness.empty(); ++fi) {
            PolyMatrix stacked = base;
            stacked.push_back(dist::symbolic_form_row(chart, Z.chart_vars, fi));
            if (r + 1 > N) break;
            for (auto& mu : minors(stacked, r + 1)) {
                if (mu.is_zero()) continue;
                if (!sat_radical_member(mu, Z.ideal, hs, gb, ord)) {
                    v.witness = canonical_generator_string(mu);
                    break;
                }
            }
        }
        if (!v.witness.empty()) break;
        // next combination
        size_t i = r;
        while (i > 0 && idx[i - 1] == rows - r + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    v.is_integral = v.witness.empty();
    return v;
}

IntegralityVerdict dimension_bound_check(const ChartSubvariety& Z) {
    IntegralityVerdict v = check_integral(Z);
    int n = Z.chart.n, d = Z.chart.d;
    v.t = ideal_dimension(projection_ideal(Z));
    v.bound = v.t + (d - v.t) * (n - d);
    v.bounds_hold = v.t <= d && v.dim_Z <= v.bound;
    v.dim_maximal = v.dim_Z == v.bound;
    return v;
}

CharacterizeResult characterize(const ChartSubvariety& Z) {
    CharacterizeResult res;
    res.detail = dimension_bound_check(Z);
    if (!res.detail.is_integral) {
        res.verdict = Characterization::NotIntegral;
        return res;
    }
    if (!res.detail.dim_maximal || !res.detail.bounds_hold) {
        res.verdict = Characterization::IntegralButNotMaximal;
        return res;
    }
    res.verdict = Characterization::IsDConormalOfImage;
    // rebuild the conormal of the projection and compare radicals both ways
    auto X = conormal::make_variety(projection_ideal(Z));
    auto C = conormal::conormal_ideal(X, Z.chart.d, Z.chart);
    Ideal rebuilt = lift_ideal(C.ideal, Z.chart_vars);
    res.cross_validated = true;
    for (const auto& g : rebuilt.gens())
        if (!radical_membership(g, Z.ideal)) res.cross_validated = false;
    for (const auto& g : Z.ideal.gens())
        if (!radical_membership(g, rebuilt)) res.cross_validated = false;
    return res;
}

const char* to_string(Characterization c) {
    switch (c) {
        case Characterization::IsDConormalOfImage: return "IsDConormalOfImage";
        case Characterization::IntegralButNotMaximal: return "IntegralButNotMaximal";
        case Characterization::NotIntegral: return "NotIntegral";
    }
    return "?";
}

}  // namespace cds::integrality
