#include "cds/whitney.hpp"

#include <algorithm>
#include <random>

namespace cds::whitney {

using conormal::AffineVariety;
using grassmann::Chart;
using std::complex;

WhitneyInstance make_instance(AffineVariety X, std::vector<int> y_axes, const Chart& chart) {
    std::sort(y_axes.begin(), y_axes.end());
    for (int a : y_axes)
        if (a < 0 || a >= X.n) throw InputError("make_instance: axis out of range");
    if (std::adjacent_find(y_axes.begin(), y_axes.end()) != y_axes.end())
        throw InputError("make_instance: repeated axis");
    if (chart.n != X.n || chart.d != X.k)
        throw InputError("make_instance: chart is not a Nash chart of X");
    for (int a : y_axes)
        if (!std::binary_search(chart.w0.begin(), chart.w0.end(), a))
            throw InputError("make_instance: chart not transversal to Y (Y must lie in the W0-span)");

    // Y c V(X.ideal): generators vanish after setting the non-Y coordinates to 0
    std::vector<GaussRat> zeros(static_cast<size_t>(X.n), GaussRat(0));
    if (y_axes.empty()) {
        for (const auto& g : X.ideal.gens())
            if (!g.eval(zeros).is_zero()) throw InputError("make_instance: Y is not contained in X");
    } else {
        std::vector<uint8_t> mask(static_cast<size_t>(X.n), 1);
        std::vector<std::string> y_names;
        for (int a : y_axes) {
            mask[static_cast<size_t>(a)] = 0;
            y_names.push_back(X.ideal.vars()->names[static_cast<size_t>(a)]);
        }
        auto y_vars = make_vars(std::move(y_names));
        for (const auto& g : X.ideal.gens())
            if (!g.substitute(mask, zeros, y_vars).is_zero())
                throw InputError("make_instance: Y is not contained in X");
    }

    WhitneyInstance W;
    W.X = std::move(X);
    W.y_axes = std::move(y_axes);
    W.chart = chart;
    return W;
}

WhitneyIdealPair build_ideal_pair(const WhitneyInstance& W) {
    auto nash = conormal::nash_ideal(W.X, W.chart);
    WhitneyIdealPair pair;
    pair.chart_vars = nash.chart_vars;

    std::vector<Polynomial> jg = nash.ideal.gens();
    for (int v = 0; v < W.X.n; ++v)
        if (!std::binary_search(W.y_axes.begin(), W.y_axes.end(), v))
            jg.push_back(Polynomial::variable(pair.chart_vars, static_cast<size_t>(v)));
    pair.J = Ideal::make(pair.chart_vars, jg);

    std::vector<Polynomial> ig = jg;
    for (int i = 0; i < W.X.n - W.X.k; ++i)
        for (int j = 0; j < W.X.k; ++j)
            if (std::binary_search(W.y_axes.begin(), W.y_axes.end(), W.chart.w0[static_cast<size_t>(j)]))
                ig.push_back(
                    Polynomial::variable(pair.chart_vars, grassmann::a_index(W.chart, i, j)));
    pair.I_script = Ideal::make(pair.chart_vars, std::move(ig));
    return pair;
}

bool condition_a_check(const WhitneyInstance& W) {
    auto pair = build_ideal_pair(W);
    for (int i = 0; i < W.X.n - W.X.k; ++i) {
        for (int j = 0; j < W.X.k; ++j) {
            if (!std::binary_search(W.y_axes.begin(), W.y_axes.end(),
                                    W.chart.w0[static_cast<size_t>(j)]))
                continue;
            Polynomial aij =
                Polynomial::variable(pair.chart_vars, grassmann::a_index(W.chart, i, j));
            if (!radical_membership(aij, pair.J)) return false;
        }
    }
    return true;
}

bool condition_a_check_all_charts(const AffineVariety& X, const std::vector<int>& y_axes) {
    bool any_chart = false;
    for (const auto& chart : grassmann::chart_cover(X.n, X.k)) {
        bool admissible = true;
        for (int a : y_axes)
            admissible &= std::binary_search(chart.w0.begin(), chart.w0.end(), a);
        if (!admissible) continue;
        any_chart = true;
        if (!condition_a_check(make_instance(X, y_axes, chart))) return false;
    }
    if (!any_chart) throw InputError("condition_a_check_all_charts: no admissible chart");
    return true;
}

namespace {

// variable the single defining equation is linear in, or -1
int solvable_variable(const AffineVariety& X) {
    if (X.ideal.gens().size() != 1) return -1;
    const auto& f = X.ideal.gens()[0];
    for (int v = 0; v < X.n; ++v) {
        uint32_t maxdeg = 0;
        for (const auto& t : f.terms())
            maxdeg = std::max(maxdeg, t.m.e[static_cast<size_t>(v)]);
        if (maxdeg == 1) return v;
    }
    return -1;
}

}  // namespace

std::vector<CurveSample> sample_curves_to_origin(const AffineVariety& X, int curves, int scales,
                                                 uint64_t seed) {
    std::mt19937_64 rng(seed + 0x243f6a8885a308d3ULL);
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_int_distribution<int> expo(1, 3);

    std::vector<double> svals;
    for (int m = 1; m <= scales; ++m) svals.push_back(std::pow(10.0, -m));

    std::vector<CurveSample> out;
    int solve_var = solvable_variable(X);
    const auto& gens = X.ideal.gens();
    int attempts = 0;
    const int max_attempts = curves * 40;

    while (static_cast<int>(out.size()) < curves) {
        if (++attempts > max_attempts)
            throw numlin::NumericError("sample_curves_to_origin: no usable curves found");
        CurveSample cs;
        cs.scales = svals;
        bool ok = true;

        if (solve_var >= 0) {
            const auto& f = gens[0];
            Polynomial fv = f.derivative(static_cast<size_t>(solve_var));
            std::vector<complex<double>> coef(static_cast<size_t>(X.n));
            std::vector<int> ex(static_cast<size_t>(X.n));
            for (int v = 0; v < X.n; ++v) {
                coef[static_cast<size_t>(v)] = {g(rng), g(rng)};
                ex[static_cast<size_t>(v)] = expo(rng);
            }
            double prev = 1e300;
            for (double s : svals) {
                std::vector<complex<double>> pt(static_cast<size_t>(X.n));
                for (int v = 0; v < X.n; ++v)
                    if (v != solve_var)
                        pt[static_cast<size_t>(v)] =
                            coef[static_cast<size_t>(v)] * std::pow(s, ex[static_cast<size_t>(v)]);
                pt[static_cast<size_t>(solve_var)] = 0.0;
                complex<double> A = fv.eval_complex(pt);
                if (std::abs(A) < 1e-12) { ok = false; break; }
                pt[static_cast<size_t>(solve_var)] = -f.eval_complex(pt) / A;
                double zn = std::abs(pt[static_cast<size_t>(solve_var)]);
                if (zn > 10.0 || zn > prev * 0.5) { ok = false; break; }  // not heading to 0
                prev = std::max(zn, 1e-300);
                cs.points.push_back(std::move(pt));
            }
        } else {
            // path tracking: smooth random seed rescaled decade by decade
            std::vector<complex<double>> pt(static_cast<size_t>(X.n));
            for (auto& z : pt) z = {g(rng), g(rng)};
            if (!conormal::detail::refine_onto(gens, pt, 1e-10)) continue;
            double cur = 1.0;
            for (double s : svals) {
                double shrink = s / cur;
                cur = s;
                for (auto& z : pt) z *= shrink;
                if (!conormal::detail::refine_onto(gens, pt, 1e-10)) { ok = false; break; }
                double norm = 0.0;
                for (const auto& z : pt) norm += std::norm(z);
                if (std::sqrt(norm) > 50.0 * s * std::sqrt(2.0 * X.n)) { ok = false; break; }
                cs.points.push_back(pt);
            }
        }
        if (ok && static_cast<int>(cs.points.size()) == scales) out.push_back(std::move(cs));
    }
    return out;
}

WRatioReport condition_w_probe(const WhitneyInstance& W, int curves, uint64_t seed) {
    using namespace numlin;
    WRatioReport rep;
    int n = W.X.n;
    int t = static_cast<int>(W.y_axes.size());

    Subspace Y;
    if (t > 0) {
        CMatrix Yb = CMatrix::Zero(n, t);
        for (int j = 0; j < t; ++j) Yb(W.y_axes[static_cast<size_t>(j)], j) = 1.0;
        Y = orthonormalize(Yb);
    } else {
        Y.basis = CMatrix::Zero(n, 0);
    }

    auto curves_s = sample_curves_to_origin(W.X, curves, 5, seed);
    for (size_t ci = 0; ci < curves_s.size(); ++ci) {
        std::vector<double> ratios;
        for (size_t m = 0; m < curves_s[ci].points.size(); ++m) {
            const auto& x = curves_s[ci].points[m];
            double dist = 0.0;
            for (int v = 0; v < n; ++v)
                if (!std::binary_search(W.y_axes.begin(), W.y_axes.end(), v))
                    dist += std::norm(x[static_cast<size_t>(v)]);
            dist = std::sqrt(dist);
            if (dist < 1e-13) continue;
            CMatrix K = conormal::detail::jacobian_kernel(W.X.ideal.gens(), x, settings().rank_tol);
            if (K.cols() != W.X.k) continue;  // singular or ill-conditioned; skip sample
            double del = t == 0 ? 0.0 : delta_distance(Y, orthonormalize(K));
            WSample s;
            s.curve = static_cast<int>(ci);
            s.scale = curves_s[ci].scales[m];
            s.dist = dist;
            s.delta = del;
            s.ratio = del / dist;
            rep.max_ratio = std::max(rep.max_ratio, s.ratio);
            ratios.push_back(s.ratio);
            rep.samples.push_back(s);
        }
        for (size_t m = 0; m + 2 < ratios.size(); ++m)
            if (ratios[m + 1] >= 10.0 * std::max(ratios[m], 1e-300) &&
                ratios[m + 2] >= 10.0 * ratios[m + 1])
                rep.bounded = false;
    }
    return rep;
}

bool delta_bound_property(int n, int d, int t, int trials, uint64_t seed) {
    using namespace numlin;
    if (!(0 <= t && t <= d && d <= n - 1)) throw InputError("delta_bound_property: bad (n,d,t)");
    std::mt19937_64 rng(seed + 0x13198a2e03707344ULL);
    std::normal_distribution<double> g(0.0, 1.0);

    Subspace Y;
    Y.basis = CMatrix::Zero(n, t);
    for (int j = 0; j < t; ++j) Y.basis(j, j) = 1.0;

    std::vector<int> w0(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) w0[static_cast<size_t>(j)] = j;
    auto chart = grassmann::chart_from_w0(n, w0);

    for (int trial = 0; trial < trials; ++trial) {
        grassmann::NumericPlaneMatrix p;
        p.chart = chart;
        p.a.assign(static_cast<size_t>(n - d), std::vector<complex<double>>(static_cast<size_t>(d)));
        double sup = 0.0;
        for (auto& row : p.a)
            for (size_t j = 0; j < row.size(); ++j) {
                row[j] = {g(rng), g(rng)};
                if (static_cast<int>(j) < t) sup = std::max(sup, std::abs(row[j]));
            }
        auto Wb = plane_from_matrix(p);
        CMatrix M(n, d);
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < n; ++r)
                M(r, c) = Wb.cols[static_cast<size_t>(c)][static_cast<size_t>(r)];
        double del = t == 0 ? 0.0 : delta_distance(Y, orthonormalize(M));
        double bound = t * std::sqrt(static_cast<double>(n - d)) * sup;
        if (del > bound * (1.0 + 1e-6)) return false;
    }
    return true;
}

}  // namespace cds::whitney
