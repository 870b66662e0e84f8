#pragma once

#include <cstdint>

#include "cds/grassmann.hpp"
#include "cds/ideal.hpp"
#include "cds/numlin.hpp"

namespace cds::conormal {

// X = V(ideal) in C^n; k is the Krull dimension, computed once on entry.
struct AffineVariety {
    Ideal ideal;
    int n = 0;
    int k = 0;
};

// Throws InputError for <1> or for generators in anything but a plain
// z-variable ring.
AffineVariety make_variety(Ideal ideal_in_z);

struct ConormalChartIdeal {
    AffineVariety variety;
    int d = 0;
    grassmann::Chart chart;
    VarsPtr chart_vars;
    Ideal ideal;  // over (z, a)
};

// Chart ideal of C_d(X): X's equations plus the rank conditions forcing each
// row equation of the graph plane into the row span of the Jacobian, with the
// singular locus removed by saturating at the ideal of (n-k)-minors.
ConormalChartIdeal conormal_ideal(const AffineVariety& X, int d, const grassmann::Chart& chart);

// d = k: the Nash modification chart.
ConormalChartIdeal nash_ideal(const AffineVariety& X, const grassmann::Chart& chart);

// Slice of the fiber nu_d^{-1}(p) in this chart, as an ideal in the a-ring.
// Throws InputError when p is not on X.
Ideal fiber_ideal(const ConormalChartIdeal& C, const std::vector<GaussRat>& p);

// dim C_d(X) = k + (d-k)(n-d)
bool dimension_formula_check(const ConormalChartIdeal& C);

struct TransversalityReport {
    bool transversal = false;
    int samples_done = 0;
    int failures = 0;
};

// Samples smooth points of V(C.ideal) by Gauss-Newton from random starts and
// checks intersection_dim(T Z, 0 x a-directions) = 0 at each. Works on any
// chart subvariety, not just Nash charts, so degenerate examples can be fed
// through it directly.
TransversalityReport transversality_check(const ConormalChartIdeal& C, int samples = 25,
                                          uint64_t seed = 0, double tol = 1e-6);

namespace detail {
// Gauss-Newton refinement of a random start onto V(gens); returns true on
// convergence with residual below tol. Used by transversality and Whitney
// probes.
bool refine_onto(const std::vector<Polynomial>& gens, std::vector<std::complex<double>>& pt,
                 double tol, int max_iter = 80);
// Right-kernel basis of the Jacobian of gens at pt (columns), via SVD.
numlin::CMatrix jacobian_kernel(const std::vector<Polynomial>& gens,
                                const std::vector<std::complex<double>>& pt, double rank_tol);
}  // namespace detail

}  // namespace cds::conormal
