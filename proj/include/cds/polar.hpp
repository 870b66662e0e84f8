#pragma once

#include <optional>

#include "cds/conormal.hpp"

namespace cds::polar {

// c_k(D) on G(ell,n): planes W with dim(W cap D) >= m, m = k + ell - d,
// where d is the dimension of the variety the condition will be paired with
// and dim D = n - d + k - 1.
struct SchubertCondition {
    grassmann::ExactPlaneBasis D;
    int k = 0;
    int ell = 0;
    int d = 0;  // dim X
};

SchubertCondition make_condition(grassmann::ExactPlaneBasis D, int k, int ell, int d);

// Random rational D of the prescribed dimension (entries p/q, p in [-100,100],
// q in [1,10]), full column rank.
SchubertCondition random_condition(int n, int k, int ell, int d, uint64_t seed);

// Rank condition on [W | D] with W the symbolic graph plane: the ideal of
// (ell + dim D - m + 1)-minors, over the a-ring of the chart. m = 0 gives the
// zero ideal (no condition).
Ideal schubert_ideal(const SchubertCondition& S, const grassmann::Chart& chart);

struct PolarResult {
    Ideal ideal;  // in the z-ring
    bool empty = false;
    int dim = -1;
};

// P_k(X; D) in one chart: eliminate the a-variables from
// conormal_ideal(X, ell, chart) + schubert_ideal.
PolarResult polar_ideal(const conormal::AffineVariety& X, const SchubertCondition& S,
                        const grassmann::Chart& chart);

// dim(nu^{-1}(0) cap c_k(D)) = dim nu^{-1}(0) - (ell-d)(n-ell) - k;
// nullopt = empty intersection (the formula's caveat case).
std::optional<bool> polar_fiber_dimension_check(const conormal::AffineVariety& X,
                                                const SchubertCondition& S,
                                                const grassmann::Chart& chart);

struct GenericPolarResult {
    std::vector<int> dims;  // per draw; -1 = empty
    int majority_dim = -1;
    bool consistent = false;  // all draws agree
};

// 5 independent random draws of D with majority vote on dim P_k(X;D); a
// disagreeing draw signals a non-generic accident, not a failure.
GenericPolarResult generic_polar(const conormal::AffineVariety& X, int k, int ell,
                                 const grassmann::Chart& chart, int draws, uint64_t seed);

}  // namespace cds::polar
