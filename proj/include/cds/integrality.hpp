#pragma once

#include <string>

#include "cds/conormal.hpp"

namespace cds::integrality {

struct EmptySmoothLocus : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A subvariety Z of C^n x G(d,n) given in one chart.
struct ChartSubvariety {
    grassmann::Chart chart;
    VarsPtr chart_vars;
    Ideal ideal;
};

ChartSubvariety make_subvariety(const grassmann::Chart& chart, Ideal ideal);
ChartSubvariety from_conormal(const conormal::ConormalChartIdeal& C);

struct IntegralityVerdict {
    bool is_integral = false;
    int dim_Z = -1;
    int t = -1;      // dim of the projection closure pi(Z)
    int bound = -1;  // t + (d-t)(n-d)
    bool bounds_hold = false;
    bool dim_maximal = false;       // dim_Z == bound
    std::string witness;            // offending minor when not integral
};

// Ideal of the closure of pi(Z) in C^n, over the z-ring.
Ideal projection_ideal(const ChartSubvariety& Z);

// Exact integrality test at generic smooth points: with r = codim Z and M the
// ideal of r-minors of Jac(Z.ideal), every (r+1)-minor of [Jac; omega_i] using
// the form row must lie in sqrt(Z.ideal : M^infty). Throws EmptySmoothLocus
// when M is contained in sqrt(Z.ideal).
IntegralityVerdict check_integral(const ChartSubvariety& Z);

// Fills dim_Z, t, bound on top of check_integral and tests t <= d and
// dim Z <= t + (d-t)(n-d).
IntegralityVerdict dimension_bound_check(const ChartSubvariety& Z);

enum class Characterization { IsDConormalOfImage, IntegralButNotMaximal, NotIntegral };

struct CharacterizeResult {
    Characterization verdict = Characterization::NotIntegral;
    IntegralityVerdict detail;
    bool cross_validated = false;  // rebuilt conormal of pi(Z) matches Z up to radicals
};

CharacterizeResult characterize(const ChartSubvariety& Z);

const char* to_string(Characterization c);

}  // namespace cds::integrality
