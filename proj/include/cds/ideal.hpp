#pragma once

#include <map>
#include <memory>
#include <vector>

#include "cds/poly.hpp"

namespace cds {

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hard caps for basis computations; predictable failure instead of
// nontermination. Overridable via CONORMAL_MAX_BASIS / CONORMAL_MAX_DEGREE.
struct GroebnerLimits {
    size_t max_basis = 5000;
    uint32_t max_degree = 60;
};
GroebnerLimits& groebner_limits();

class Ideal {
public:
    Ideal() = default;
    static Ideal make(VarsPtr vars, std::vector<Polynomial> gens);

    const VarsPtr& vars() const { return vars_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    size_t nvars() const { return vars_ ? vars_->size() : 0; }

    // cached reduced Groebner basis (shared across copies; ideals are immutable)
    const std::vector<Polynomial>& basis(const MonomialOrder& ord) const;

private:
    VarsPtr vars_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<std::map<std::string, std::vector<Polynomial>>> cache_;
};

// Remainder of multivariate division of f by G under ord; no term of the
// result is divisible by any leading term of G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord);

// Reduced Groebner basis (monic generators, sorted by leading monomial).
std::vector<Polynomial> buchberger(const Ideal& I, const MonomialOrder& ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

bool ideal_member(const Polynomial& f, const Ideal& I);
bool contains_one(const Ideal& I);

// I cap k[kept variables]: generators of the elimination ideal, expressed over
// the same variable set (the dropped variables simply do not occur).
Ideal eliminate(const Ideal& I, const std::vector<uint8_t>& drop_mask);

Ideal intersect(const Ideal& A, const Ideal& B);

// I : J^infty via the extra-variable trick, generator by generator, with the
// per-generator saturations intersected.
Ideal saturate(const Ideal& I, const Ideal& J);

// f in sqrt(I), by the Rabinowitsch test: 1 in I + <1 - w f>.
bool radical_membership(const Polynomial& f, const Ideal& I);

// f in sqrt(I : h^infty): 1 in I + <1 - s h, 1 - w f>.
bool saturation_radical_membership(const Polynomial& f, const Ideal& I, const Polynomial& h);

// Krull dimension of the quotient ring, via maximal independent sets of the
// initial ideal. Throws InputError for <1>.
int ideal_dimension(const Ideal& I);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Row i = gradient of generator i with respect to the masked variables.
PolyMatrix jacobian(const Ideal& I, const std::vector<uint8_t>& wrt_mask);

Polynomial poly_det(const PolyMatrix& M);

// All size x size minors, rows/columns enumerated lexicographically by index
// set (rows outer), so generated ideals are reproducible.
std::vector<Polynomial> minors(const PolyMatrix& M, size_t size);

// Re-express generators over the subset of variables where keep_mask = 1;
// throws if some generator involves a dropped variable.
Ideal restrict_ideal(const Ideal& I, const std::vector<uint8_t>& keep_mask, VarsPtr new_vars);

// Re-express generators over a superset of the variables, matched by name.
Ideal lift_ideal(const Ideal& I, const VarsPtr& new_vars);

// Monic generator scaled to integer-cleared Gaussian coefficients with a
// canonical sign; stable printing for reports and golden files.
std::string canonical_generator_string(const Polynomial& p);
std::vector<std::string> sorted_generator_strings(const Ideal& I);

}  // namespace cds
