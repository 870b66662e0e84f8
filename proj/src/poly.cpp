#include "cds/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cds {

int VariableSet::index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

VarsPtr make_vars(std::vector<std::string> names, std::vector<int> block) {
    if (block.empty()) block.assign(names.size(), 0);
    if (block.size() != names.size())
        throw InputError("VariableSet: block list does not match names");
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw InputError("VariableSet: duplicate variable '" + names[i] + "'");
    auto vs = std::make_shared<VariableSet>();
    vs->names = std::move(names);
    vs->block = std::move(block);
    return vs;
}

VarsPtr extend_vars(const VarsPtr& vars, const std::vector<std::string>& extra, int blk) {
    std::vector<std::string> names = vars->names;
    std::vector<int> block = vars->block;
    for (const auto& n : extra) {
        names.push_back(n);
        block.push_back(blk);
    }
    return make_vars(std::move(names), std::move(block));
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r{e, deg + o.deg};
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r{e, deg - o.deg};
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r{a.e, 0};
    for (size_t i = 0; i < a.e.size(); ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        r.deg += r.e[i];
    }
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
}

int cmp_grevlex(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    // Ties: last variable with differing exponent, smaller exponent wins.
    for (size_t i = a.e.size(); i-- > 0;) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

// grevlex restricted to the masked (sel != 0) or unmasked variables
int cmp_grevlex_masked(const Monomial& a, const Monomial& b,
                       const std::vector<uint8_t>& mask, bool sel) {
    uint32_t da = 0, db = 0;
    for (size_t i = 0; i < a.e.size(); ++i) {
        if ((mask[i] != 0) == sel) {
            da += a.e[i];
            db += b.e[i];
        }
    }
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = a.e.size(); i-- > 0;) {
        if ((mask[i] != 0) == sel && a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    switch (kind) {
        case OrderKind::Lex:
            return cmp_lex(a, b);
        case OrderKind::GrevLex:
            return cmp_grevlex(a, b);
        case OrderKind::Elim: {
            int c = cmp_grevlex_masked(a, b, front, true);
            if (c != 0) return c;
            return cmp_grevlex_masked(a, b, front, false);
        }
    }
    return 0;
}

std::string MonomialOrder::key() const {
    switch (kind) {
        case OrderKind::Lex:
            return "lex";
        case OrderKind::GrevLex:
            return "grevlex";
        case OrderKind::Elim: {
            std::string k = "elim:";
            for (auto f : front) k += f ? '1' : '0';
            return k;
        }
    }
    return "?";
}

int canonical_cmp(const Monomial& a, const Monomial& b) { return cmp_grevlex(a, b); }

Polynomial Polynomial::constant(VarsPtr vars, GaussRat c) {
    Polynomial p(vars);
    if (!c.is_zero()) p.terms_.push_back({Monomial::one(vars->size()), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(VarsPtr vars, size_t idx, uint32_t power) {
    Polynomial p(vars);
    if (power == 0) return constant(std::move(vars), GaussRat(1));
    Monomial m = Monomial::one(p.vars_->size());
    m.e[idx] = power;
    m.deg = power;
    p.terms_.push_back({std::move(m), GaussRat(1)});
    return p;
}

Polynomial Polynomial::from_terms(VarsPtr vars, std::vector<Term> terms) {
    Polynomial p(std::move(vars));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return canonical_cmp(a.m, b.m) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

uint32_t Polynomial::total_degree() const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.deg);
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (vars_ && o.vars_ && !(*vars_ == *o.vars_))
        throw InputError("polynomial addition over mismatched variable sets");
    Polynomial r(vars_ ? vars_ : o.vars_);
    // merge of two canonically sorted term lists
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = canonical_cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(o.terms_[j++]);
        else {
            GaussRat s = terms_[i].c + o.terms_[j].c;
            if (!s.is_zero()) r.terms_.push_back({terms_[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (vars_ && o.vars_ && !(*vars_ == *o.vars_))
        throw InputError("polynomial product over mismatched variable sets");
    Polynomial r(vars_ ? vars_ : o.vars_);
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc.push_back({a.m * b.m, a.c * b.c});
    return from_terms(r.vars_, std::move(acc));
}

Polynomial Polynomial::operator*(const GaussRat& c) const {
    if (c.is_zero()) return zero(vars_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Polynomial Polynomial::derivative(size_t var) const {
    Polynomial r(vars_);
    for (const auto& t : terms_) {
        if (t.m.e[var] == 0) continue;
        Term d{t.m, t.c * GaussRat(static_cast<long>(t.m.e[var]))};
        d.m.e[var] -= 1;
        d.m.deg -= 1;
        r.terms_.push_back(std::move(d));
    }
    r.normalize();
    return r;
}

GaussRat Polynomial::eval(const std::vector<GaussRat>& point) const {
    if (point.size() != nvars()) throw InputError("eval: point dimension mismatch");
    GaussRat acc(0);
    for (const auto& t : terms_) {
        GaussRat v = t.c;
        for (size_t i = 0; i < point.size(); ++i)
            for (uint32_t k = 0; k < t.m.e[i]; ++k) v *= point[i];
        acc += v;
    }
    return acc;
}

std::complex<double> Polynomial::eval_complex(
    const std::vector<std::complex<double>>& point) const {
    std::complex<double> acc(0.0);
    for (const auto& t : terms_) {
        std::complex<double> v = t.c.to_complex();
        for (size_t i = 0; i < point.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            std::complex<double> p = point[i];
            for (uint32_t k = 1; k < t.m.e[i]; ++k) p *= point[i];
            v *= p;
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<uint8_t>& mask,
                                  const std::vector<GaussRat>& values,
                                  VarsPtr new_vars) const {
    std::vector<size_t> keep;  // old index of each kept variable
    for (size_t i = 0; i < nvars(); ++i)
        if (!mask[i]) keep.push_back(i);
    if (keep.size() != new_vars->size())
        throw InputError("substitute: kept variables do not match target set");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        GaussRat c = t.c;
        for (size_t i = 0; i < nvars(); ++i) {
            if (!mask[i]) continue;
            for (uint32_t k = 0; k < t.m.e[i]; ++k) c *= values[i];
        }
        if (c.is_zero()) continue;
        Monomial m = Monomial::one(keep.size());
        for (size_t j = 0; j < keep.size(); ++j) {
            m.e[j] = t.m.e[keep[j]];
            m.deg += m.e[j];
        }
        out.push_back({std::move(m), std::move(c)});
    }
    return from_terms(std::move(new_vars), std::move(out));
}

Polynomial Polynomial::lift(VarsPtr new_vars, const std::vector<size_t>& old_to_new) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = Monomial::one(new_vars->size());
        m.deg = t.m.deg;
        for (size_t i = 0; i < nvars(); ++i) m.e[old_to_new[i]] = t.m.e[i];
        out.push_back({std::move(m), t.c});
    }
    return from_terms(std::move(new_vars), std::move(out));
}

std::vector<std::complex<double>> Polynomial::univariate_coeffs(
    size_t var, const std::vector<std::complex<double>>& point) const {
    std::vector<std::complex<double>> coeffs;
    for (const auto& t : terms_) {
        uint32_t p = t.m.e[var];
        if (coeffs.size() <= p) coeffs.resize(p + 1, {0.0, 0.0});
        std::complex<double> v = t.c.to_complex();
        for (size_t i = 0; i < nvars(); ++i) {
            if (i == var || t.m.e[i] == 0) continue;
            for (uint32_t k = 0; k < t.m.e[i]; ++k) v *= point[i];
        }
        coeffs[p] += v;
    }
    return coeffs;
}

bool Polynomial::involves(size_t var) const {
    for (const auto& t : terms_)
        if (t.m.e[var] != 0) return true;
    return false;
}

bool Polynomial::terms_same(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        GaussRat c = t.c;
        if (first) {
            if (c.is_real() && sgn(c.re) < 0) {
                os << "-";
                c = -c;
            }
        } else {
            if (c.is_real() && sgn(c.re) < 0) {
                os << " - ";
                c = -c;
            } else {
                os << " + ";
            }
        }
        first = false;
        std::string mon;
        for (size_t i = 0; i < nvars(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += vars_->names[i];
            if (t.m.e[i] > 1) mon += "^" + std::to_string(t.m.e[i]);
        }
        bool unit = c.is_real() && c.re == 1;
        std::string cs = c.is_real() ? c.str() : "(" + c.str() + ")";
        if (mon.empty())
            os << cs;
        else if (unit)
            os << mon;
        else
            os << cs << "*" << mon;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
    const std::string& text;
    const VarsPtr& vars;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        size_t line = 1, col = 1;
        for (size_t i = 0; i < pos && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else
                ++col;
        }
        throw InputError("parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + msg);
    }

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Polynomial expr() {
        Polynomial r = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                break;
        }
        return r;
    }

    Polynomial term() {
        Polynomial r = factor();
        while (eat('*')) r = r * factor();
        return r;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (eat('^')) {
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail("expected exponent");
            uint32_t p = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                p = p * 10 + static_cast<uint32_t>(text[pos++] - '0');
            Polynomial r = Polynomial::constant(vars, GaussRat(1));
            for (uint32_t k = 0; k < p; ++k) r = r * b;
            return r;
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Polynomial r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '-') {
            ++pos;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial number() {
        mpz_class num = integer();
        if (eat('/')) {
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail("expected denominator");
            mpz_class den = integer();
            if (den == 0) fail("zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            return imag_tail(GaussRat(q));
        }
        return imag_tail(GaussRat(mpq_class(num)));
    }

    // optional trailing i on a numeric literal: "3i", "1/2i"
    Polynomial imag_tail(GaussRat v) {
        if (pos < text.size() && text[pos] == 'i' && vars->index_of("i") < 0 &&
            (pos + 1 >= text.size() ||
             !(std::isalnum(static_cast<unsigned char>(text[pos + 1])) || text[pos + 1] == '_'))) {
            ++pos;
            return Polynomial::constant(vars, GaussRat(mpq_class(0), v.re));
        }
        return Polynomial::constant(vars, std::move(v));
    }

    mpz_class integer() {
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        return mpz_class(digits);
    }

    Polynomial name() {
        std::string id;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            id += text[pos++];
        int idx = vars->index_of(id);
        if (idx < 0) {
            if (id == "i") return Polynomial::constant(vars, GaussRat::i());
            fail("unknown variable '" + id + "'");
        }
        return Polynomial::variable(vars, static_cast<size_t>(idx));
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarsPtr& vars) {
    Parser p{text, vars};
    Polynomial r = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

GaussRat parse_scalar(const std::string& text) {
    static const VarsPtr none = make_vars({});
    Polynomial p = parse_polynomial(text, none);
    if (p.is_zero()) return GaussRat(0);
    return p.terms()[0].c;
}

}  // namespace cds
