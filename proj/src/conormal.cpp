#include "cds/conormal.hpp"

#include <random>

#include "cds/distribution.hpp"

namespace cds::conormal {

using grassmann::Chart;

AffineVariety make_variety(Ideal ideal_in_z) {
    AffineVariety X;
    X.n = static_cast<int>(ideal_in_z.nvars());
    if (X.n == 0) throw InputError("make_variety: empty variable set");
    if (contains_one(ideal_in_z)) throw InputError("make_variety: ideal is <1>, variety empty");
    X.k = ideal_dimension(ideal_in_z);
    X.ideal = std::move(ideal_in_z);
    return X;
}

namespace {

// largest s such that some s-minor of the Jacobian is not in sqrt(I)
int generic_jacobian_rank(const AffineVariety& X) {
    std::vector<uint8_t> all(static_cast<size_t>(X.n), 1);
    PolyMatrix J = jacobian(X.ideal, all);
    size_t rows = J.size();
    size_t cols = rows ? J[0].size() : 0;
    int rank = 0;
    for (size_t s = 1; s <= std::min(rows, cols); ++s) {
        bool some_nonvanishing = false;
        for (const auto& m : minors(J, s)) {
            if (!m.is_zero() && !radical_membership(m, X.ideal)) {
                some_nonvanishing = true;
                break;
            }
        }
        if (!some_nonvanishing) break;
        rank = static_cast<int>(s);
    }
    return rank;
}

}  // namespace

ConormalChartIdeal conormal_ideal(const AffineVariety& X, int d, const Chart& chart) {
    if (chart.n != X.n) throw InputError("conormal_ideal: chart ambient dimension mismatch");
    if (chart.d != d) throw InputError("conormal_ideal: chart is not a G(d,n) chart");
    if (d < X.k || d > X.n - 1) throw InputError("conormal_ideal: require k <= d <= n-1");

    int n = X.n;
    int k = X.k;
    int r = n - k;
    if (generic_jacobian_rank(X) != r)
        throw InputError("conormal_ideal: generic Jacobian rank is not n-k "
                         "(input not reduced equidimensional)");

    ConormalChartIdeal C;
    C.variety = X;
    C.d = d;
    C.chart = chart;
    C.chart_vars = grassmann::chart_ring(chart, X.ideal.vars()->names);

    std::vector<size_t> z_to_chart(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) z_to_chart[static_cast<size_t>(i)] = static_cast<size_t>(i);

    std::vector<Polynomial> gens;
    for (const auto& g : X.ideal.gens()) gens.push_back(g.lift(C.chart_vars, z_to_chart));

    std::vector<uint8_t> z_mask(static_cast<size_t>(n), 1);
    PolyMatrix Jz = jacobian(X.ideal, z_mask);
    PolyMatrix J;  // lifted into the chart ring, columns = z-slots
    for (const auto& row : Jz) {
        std::vector<Polynomial> lrow;
        for (const auto& e : row) lrow.push_back(e.lift(C.chart_vars, z_to_chart));
        J.push_back(std::move(lrow));
    }

    size_t rows = J.size();
    size_t rr = static_cast<size_t>(r);
    if (rr + 1 <= rows + 1 && rr + 1 <= static_cast<size_t>(n)) {
        for (int i = 0; i < n - d; ++i) {
            PolyMatrix stacked = J;
            stacked.push_back(dist::symbolic_form_row(chart, C.chart_vars, i));
            for (auto& row : stacked) row.resize(static_cast<size_t>(n), Polynomial::zero(C.chart_vars));
            if (rr + 1 > stacked.size()) continue;
            for (auto& m : minors(stacked, rr + 1))
                if (!m.is_zero()) gens.push_back(std::move(m));
        }
    }
    Ideal raw = Ideal::make(C.chart_vars, std::move(gens));

    std::vector<Polynomial> M;
    if (rr >= 1 && rr <= rows && rr <= static_cast<size_t>(n))
        for (auto& m : minors(J, rr))
            if (!m.is_zero()) M.push_back(std::move(m));
    C.ideal = M.empty() ? raw : saturate(raw, Ideal::make(C.chart_vars, std::move(M)));
    return C;
}

ConormalChartIdeal nash_ideal(const AffineVariety& X, const Chart& chart) {
    return conormal_ideal(X, X.k, chart);
}

Ideal fiber_ideal(const ConormalChartIdeal& C, const std::vector<GaussRat>& p) {
    int n = C.variety.n;
    if (static_cast<int>(p.size()) != n) throw InputError("fiber_ideal: point dimension mismatch");
    for (const auto& g : C.variety.ideal.gens())
        if (!g.eval(p).is_zero()) throw InputError("fiber_ideal: point is not on X");

    size_t total = C.chart_vars->size();
    std::vector<uint8_t> mask(total, 0);
    std::vector<GaussRat> values(total, GaussRat(0));
    for (int i = 0; i < n; ++i) {
        mask[static_cast<size_t>(i)] = 1;
        values[static_cast<size_t>(i)] = p[static_cast<size_t>(i)];
    }
    std::vector<std::string> a_names(C.chart_vars->names.begin() + n, C.chart_vars->names.end());
    VarsPtr a_vars = make_vars(std::move(a_names));
    std::vector<Polynomial> gens;
    for (const auto& g : C.ideal.gens()) gens.push_back(g.substitute(mask, values, a_vars));
    return Ideal::make(a_vars, std::move(gens));
}

bool dimension_formula_check(const ConormalChartIdeal& C) {
    int n = C.variety.n, k = C.variety.k, d = C.d;
    return ideal_dimension(C.ideal) == k + (d - k) * (n - d);
}

namespace detail {

bool refine_onto(const std::vector<Polynomial>& gens, std::vector<std::complex<double>>& pt,
                 double tol, int max_iter) {
    using namespace numlin;
    size_t m = gens.size();
    size_t N = pt.size();
    std::vector<std::vector<Polynomial>> grads(m);
    for (size_t i = 0; i < m; ++i)
        for (size_t v = 0; v < N; ++v) grads[i].push_back(gens[i].derivative(v));
    for (int it = 0; it < max_iter; ++it) {
        CVector f(static_cast<Eigen::Index>(m));
        double res = 0.0;
        for (size_t i = 0; i < m; ++i) {
            f(static_cast<Eigen::Index>(i)) = gens[i].eval_complex(pt);
            res = std::max(res, std::abs(f(static_cast<Eigen::Index>(i))));
        }
        if (res < tol) return true;
        CMatrix J(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(N));
        for (size_t i = 0; i < m; ++i)
            for (size_t v = 0; v < N; ++v)
                J(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(v)) =
                    grads[i][v].eval_complex(pt);
        CVector step = J.completeOrthogonalDecomposition().solve(f);
        if (!step.allFinite()) return false;
        for (size_t v = 0; v < N; ++v) pt[v] -= step(static_cast<Eigen::Index>(v));
    }
    double res = 0.0;
    for (const auto& g : gens) res = std::max(res, std::abs(g.eval_complex(pt)));
    return res < tol;
}

numlin::CMatrix jacobian_kernel(const std::vector<Polynomial>& gens,
                                const std::vector<std::complex<double>>& pt, double rank_tol) {
    using namespace numlin;
    size_t m = gens.size();
    size_t N = pt.size();
    CMatrix J(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(N));
    for (size_t i = 0; i < m; ++i)
        for (size_t v = 0; v < N; ++v)
            J(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(v)) =
                gens[i].derivative(v).eval_complex(pt);
    Eigen::JacobiSVD<CMatrix> svd(J, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double smax = sv.size() ? sv(0) : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (smax > 0.0 && sv(i) > rank_tol * smax) ++rank;
    return svd.matrixV().rightCols(static_cast<Eigen::Index>(N) - rank);
}

}  // namespace detail

TransversalityReport transversality_check(const ConormalChartIdeal& C, int samples,
                                          uint64_t seed, double tol) {
    using namespace numlin;
    TransversalityReport rep;
    int n = C.variety.n;
    size_t N = C.chart_vars->size();
    int dimZ = ideal_dimension(C.ideal);
    const auto& gens = C.ideal.gens();

    // the 0 x T_W G factor: span of the a-coordinate axes
    CMatrix Adirs = CMatrix::Zero(static_cast<Eigen::Index>(N),
                                  static_cast<Eigen::Index>(N) - n);
    for (Eigen::Index j = 0; j < Adirs.cols(); ++j) Adirs(n + j, j) = 1.0;
    Subspace A = orthonormalize(Adirs);

    std::mt19937_64 rng(seed + 0x7f4a7c159e3779b9ULL);
    std::normal_distribution<double> g(0.0, 1.0);
    int attempts = 0;
    const int max_attempts = samples * 20;
    while (rep.samples_done < samples) {
        if (++attempts > max_attempts)
            throw NumericError("transversality_check: insufficient smooth samples found");
        std::vector<std::complex<double>> pt(N);
        for (auto& z : pt) z = {g(rng), g(rng)};
        if (!detail::refine_onto(gens, pt, 1e-10)) continue;
        CMatrix K = detail::jacobian_kernel(gens, pt, settings().rank_tol);
        if (K.cols() != dimZ) continue;  // singular or poorly conditioned point
        Subspace TZ = orthonormalize(K);
        ++rep.samples_done;
        if (intersection_dim(TZ, A, tol) != 0) ++rep.failures;
    }
    rep.transversal = rep.failures == 0;
    return rep;
}

}  // namespace cds::conormal
