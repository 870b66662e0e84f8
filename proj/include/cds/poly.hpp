#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cds/gaussrat.hpp"

namespace cds {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered list of distinct variable names, partitioned into blocks
// (block 0 = point coordinates, block 1 = Grassmannian chart coordinates,
// higher blocks = auxiliary variables).
struct VariableSet {
    std::vector<std::string> names;
    std::vector<int> block;

    size_t size() const { return names.size(); }
    int index_of(const std::string& name) const;
    bool operator==(const VariableSet& o) const { return names == o.names; }
};

using VarsPtr = std::shared_ptr<const VariableSet>;

VarsPtr make_vars(std::vector<std::string> names, std::vector<int> block = {});
// New set with extra names appended in the given block.
VarsPtr extend_vars(const VarsPtr& vars, const std::vector<std::string>& extra, int blk);

struct Monomial {
    std::vector<uint32_t> e;
    uint32_t deg = 0;

    static Monomial one(size_t nvars) { return Monomial{std::vector<uint32_t>(nvars, 0), 0}; }
    bool is_one() const { return deg == 0; }

    Monomial operator*(const Monomial& o) const;
    // Exact quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { Lex, GrevLex, Elim };

// Total multiplicative well-order on monomials. Elim compares the masked
// front block first (grevlex within the block), making it an elimination
// order for the front variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;
    std::vector<uint8_t> front;  // Elim only; 1 = front-block variable

    int cmp(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    static MonomialOrder lex() { return {OrderKind::Lex, {}}; }
    static MonomialOrder grevlex() { return {OrderKind::GrevLex, {}}; }
    static MonomialOrder elim(std::vector<uint8_t> front_mask) {
        return {OrderKind::Elim, std::move(front_mask)};
    }
    std::string key() const;  // stable identifier for caching
};

struct Term {
    Monomial m;
    GaussRat c;
};

// Terms kept sorted descending under a fixed canonical grevlex order;
// no zero coefficients are stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(VarsPtr vars) : vars_(std::move(vars)) {}

    static Polynomial zero(VarsPtr vars) { return Polynomial(std::move(vars)); }
    static Polynomial constant(VarsPtr vars, GaussRat c);
    static Polynomial variable(VarsPtr vars, size_t idx, uint32_t power = 1);
    static Polynomial from_terms(VarsPtr vars, std::vector<Term> terms);  // normalizes

    const VarsPtr& vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_[0].m.is_one(); }
    uint32_t total_degree() const;
    size_t nvars() const { return vars_ ? vars_->size() : 0; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const GaussRat& c) const;
    bool operator==(const Polynomial& o) const { return terms_same(o); }
    bool operator!=(const Polynomial& o) const { return !terms_same(o); }

    Polynomial derivative(size_t var) const;
    GaussRat eval(const std::vector<GaussRat>& point) const;
    std::complex<double> eval_complex(const std::vector<std::complex<double>>& point) const;

    // Substitute exact values for the variables where mask[i] = 1 and re-express
    // the result over new_vars (the kept variables, in original relative order).
    Polynomial substitute(const std::vector<uint8_t>& mask,
                          const std::vector<GaussRat>& values, VarsPtr new_vars) const;
    // Re-express over a superset of the variables; old_to_new[i] gives the
    // index of variable i in new_vars.
    Polynomial lift(VarsPtr new_vars, const std::vector<size_t>& old_to_new) const;

    // Coefficients of the polynomial viewed univariately in `var`, all other
    // variables evaluated at `point` (entry for `var` ignored); index = power.
    std::vector<std::complex<double>> univariate_coeffs(
        size_t var, const std::vector<std::complex<double>>& point) const;

    bool involves(size_t var) const;

    std::string str() const;

private:
    bool terms_same(const Polynomial& o) const;
    void normalize();  // sort canonical, merge, drop zeros

    VarsPtr vars_;
    std::vector<Term> terms_;
};

// Canonical comparator used for the internal term layout (grevlex).
int canonical_cmp(const Monomial& a, const Monomial& b);

// Recursive-descent parser for the `.var` polynomial grammar:
// names, integers, rationals p/q, the literal i (unless declared as a
// variable), + - * ^ and parentheses. Throws InputError with position info.
Polynomial parse_polynomial(const std::string& text, const VarsPtr& vars);
GaussRat parse_scalar(const std::string& text);

}  // namespace cds
