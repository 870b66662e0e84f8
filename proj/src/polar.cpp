#include "cds/polar.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace cds::polar {

using grassmann::Chart;

SchubertCondition make_condition(grassmann::ExactPlaneBasis D, int k, int ell, int d) {
    if (k < 1 || k > d - 1) throw InputError("make_condition: require 1 <= k <= d-1");
    if (ell < d || ell > D.n - 1) throw InputError("make_condition: require d <= ell <= n-1");
    if (static_cast<int>(D.cols.size()) != D.n - d + k - 1)
        throw InputError("make_condition: dim D must be n-d+k-1");
    return SchubertCondition{std::move(D), k, ell, d};
}

SchubertCondition random_condition(int n, int k, int ell, int d, uint64_t seed) {
    std::mt19937_64 rng(seed + 0xa4093822299f31d0ULL);
    std::uniform_int_distribution<int> num(-100, 100);
    std::uniform_int_distribution<int> den(1, 10);
    grassmann::ExactPlaneBasis D;
    D.n = n;
    int dim = n - d + k - 1;
    for (int c = 0; c < dim; ++c) {
        std::vector<GaussRat> col;
        for (int r = 0; r < n; ++r) col.push_back(GaussRat(mpq_class(num(rng), den(rng))));
        D.cols.push_back(std::move(col));
    }
    return make_condition(std::move(D), k, ell, d);
}

Ideal schubert_ideal(const SchubertCondition& S, const Chart& chart) {
    int n = chart.n;
    int ell = chart.d;
    if (ell != S.ell || S.D.n != n) throw InputError("schubert_ideal: shape mismatch");
    int dimD = static_cast<int>(S.D.cols.size());
    int m = S.k + S.ell - S.d;

    std::vector<std::string> a_names;
    for (int i = 0; i < n - ell; ++i)
        for (int j = 0; j < ell; ++j) a_names.push_back(grassmann::a_name(i, j));
    auto a_vars = make_vars(std::move(a_names));
    if (m <= 0) return Ideal::make(a_vars, {});

    int size = ell + dimD - m + 1;
    if (size > n || size > ell + dimD)  // rank bound below the required cut: no condition
        return Ideal::make(a_vars, {});

    // [W | D]: columns of the symbolic graph plane, then D
    PolyMatrix M(static_cast<size_t>(n),
                 std::vector<Polynomial>(static_cast<size_t>(ell + dimD), Polynomial::zero(a_vars)));
    for (int j = 0; j < ell; ++j) {
        M[static_cast<size_t>(chart.w0[j])][static_cast<size_t>(j)] =
            Polynomial::constant(a_vars, GaussRat(1));
        for (int i = 0; i < n - ell; ++i)
            M[static_cast<size_t>(chart.w1[i])][static_cast<size_t>(j)] =
                Polynomial::variable(a_vars, static_cast<size_t>(i * ell + j));
    }
    for (int c = 0; c < dimD; ++c)
        for (int r = 0; r < n; ++r)
            M[static_cast<size_t>(r)][static_cast<size_t>(ell + c)] =
                Polynomial::constant(a_vars, S.D.cols[static_cast<size_t>(c)][static_cast<size_t>(r)]);

    std::vector<Polynomial> gens;
    for (auto& mu : minors(M, static_cast<size_t>(size)))
        if (!mu.is_zero()) gens.push_back(std::move(mu));
    return Ideal::make(a_vars, std::move(gens));
}

PolarResult polar_ideal(const conormal::AffineVariety& X, const SchubertCondition& S,
                        const Chart& chart) {
    if (S.d != X.k) throw InputError("polar_ideal: condition built for a different dim X");
    auto C = conormal::conormal_ideal(X, S.ell, chart);
    Ideal schub = lift_ideal(schubert_ideal(S, chart), C.chart_vars);
    std::vector<Polynomial> gens = C.ideal.gens();
    for (const auto& g : schub.gens()) gens.push_back(g);
    Ideal total = Ideal::make(C.chart_vars, std::move(gens));

    int n = X.n;
    size_t N = C.chart_vars->size();
    std::vector<uint8_t> drop(N, 0);
    for (size_t i = static_cast<size_t>(n); i < N; ++i) drop[i] = 1;
    Ideal elim = eliminate(total, drop);
    std::vector<uint8_t> keep(N, 0);
    for (int i = 0; i < n; ++i) keep[static_cast<size_t>(i)] = 1;
    std::vector<std::string> z_names(C.chart_vars->names.begin(),
                                     C.chart_vars->names.begin() + n);
    PolarResult res;
    res.ideal = restrict_ideal(elim, keep, make_vars(std::move(z_names)));
    res.empty = contains_one(res.ideal);
    res.dim = res.empty ? -1 : ideal_dimension(res.ideal);
    return res;
}

std::optional<bool> polar_fiber_dimension_check(const conormal::AffineVariety& X,
                                                const SchubertCondition& S, const Chart& chart) {
    auto C = conormal::conormal_ideal(X, S.ell, chart);
    std::vector<GaussRat> origin(static_cast<size_t>(X.n), GaussRat(0));
    Ideal fiber = conormal::fiber_ideal(C, origin);
    if (contains_one(fiber)) return std::nullopt;  // 0 outside this chart's part of C
    int fiber_dim = ideal_dimension(fiber);

    Ideal schub = lift_ideal(schubert_ideal(S, chart), fiber.vars());
    std::vector<Polynomial> gens = fiber.gens();
    for (const auto& g : schub.gens()) gens.push_back(g);
    Ideal cut = Ideal::make(fiber.vars(), std::move(gens));
    if (contains_one(cut)) return std::nullopt;

    int lhs = ideal_dimension(cut);
    int rhs = fiber_dim - (S.ell - S.d) * (X.n - S.ell) - S.k;
    return lhs == rhs;
}

GenericPolarResult generic_polar(const conormal::AffineVariety& X, int k, int ell,
                                 const Chart& chart, int draws, uint64_t seed) {
    GenericPolarResult res;
    std::map<int, int> votes;
    for (int i = 0; i < draws; ++i) {
        auto S = random_condition(X.n, k, ell, X.k, seed + static_cast<uint64_t>(i) * 1000003ULL);
        auto P = polar_ideal(X, S, chart);
        res.dims.push_back(P.dim);
        ++votes[P.dim];
    }
    int best = 0;
    for (const auto& [dim, count] : votes)
        if (count > best) { best = count; res.majority_dim = dim; }
    res.consistent = best == draws;
    return res;
}

}  // namespace cds::polar
