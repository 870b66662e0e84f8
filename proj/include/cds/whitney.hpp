#pragma once

#include <complex>
#include <cstdint>

#include "cds/conormal.hpp"

namespace cds::whitney {

// Stratum pair (X, Y) with Y a coordinate subspace, checked in a Nash chart
// whose W0-span contains Y (so W1 meets Y only in 0).
struct WhitneyInstance {
    conormal::AffineVariety X;
    std::vector<int> y_axes;  // 0-based coordinate axes spanning Y
    grassmann::Chart chart;   // d = X.k
};

WhitneyInstance make_instance(conormal::AffineVariety X, std::vector<int> y_axes,
                              const grassmann::Chart& chart);

struct WhitneyIdealPair {
    VarsPtr chart_vars;
    Ideal I_script;  // ideal of C_d(Y) cap Nash(X) in the chart
    Ideal J;         // ideal of nu^{-1}(Y)
};

WhitneyIdealPair build_ideal_pair(const WhitneyInstance& W);

// Condition a) at 0 as the radical comparison sqrt(I_script) = sqrt(J): since
// J c I_script always, this reduces to membership of each extra a_ij
// generator in sqrt(J).
bool condition_a_check(const WhitneyInstance& W);

// Aggregate over every Nash chart admissible for Y: a limit tangent plane can
// escape a single chart, so the pointwise statement needs the full cover.
bool condition_a_check_all_charts(const conormal::AffineVariety& X,
                                  const std::vector<int>& y_axes);

// A numeric curve on X approaching 0, sampled at a decreasing sequence of
// scales. Exactly-solved curves carry zero residual; tracked curves are
// Gauss-Newton refined to 1e-10.
struct CurveSample {
    std::vector<double> scales;
    std::vector<std::vector<std::complex<double>>> points;  // one per scale
};

// Rational curves through 0 obtained by solving the hypersurface equation for
// a variable it is linear in; falls back to numeric path tracking from smooth
// seeds when no generator admits a solvable variable.
std::vector<CurveSample> sample_curves_to_origin(const conormal::AffineVariety& X, int curves,
                                                 int scales, uint64_t seed);

struct WSample {
    int curve = 0;
    double scale = 0.0;
    double dist = 0.0;   // d(x, Y)
    double delta = 0.0;  // delta(T_yY, T_xX0)
    double ratio = 0.0;
};

struct WRatioReport {
    std::vector<WSample> samples;
    double max_ratio = 0.0;
    bool bounded = true;  // false = unbounded-suspected (probe, not proof)
};

WRatioReport condition_w_probe(const WhitneyInstance& W, int curves, uint64_t seed);

// The proof's explicit estimate delta(Y, W) <= t sqrt(n-d) sup|a_ij| (j <= t),
// with Y = C^t x {0} and W the graph plane of a random a; slack 1 + 1e-6.
bool delta_bound_property(int n, int d, int t, int trials, uint64_t seed);

}  // namespace cds::whitney
