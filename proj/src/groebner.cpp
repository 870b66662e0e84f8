#include <algorithm>
#include <functional>
#include <set>

#include "cds/ideal.hpp"

namespace cds {

GroebnerLimits& groebner_limits() {
    static GroebnerLimits limits;
    return limits;
}

Ideal Ideal::make(VarsPtr vars, std::vector<Polynomial> gens) {
    Ideal I;
    I.vars_ = std::move(vars);
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!(*g.vars() == *I.vars_))
            throw InputError("ideal generators over mismatched variable sets");
        I.gens_.push_back(std::move(g));
    }
    I.cache_ = std::make_shared<std::map<std::string, std::vector<Polynomial>>>();
    return I;
}

// ---------------------------------------------------------------------------
// engine: term lists sorted descending under the active order

namespace {

using OPoly = std::vector<Term>;

OPoly to_opoly(const Polynomial& p, const MonomialOrder& ord) {
    OPoly t = p.terms();
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
    return t;
}

Polynomial from_opoly(const VarsPtr& vars, OPoly t) {
    return Polynomial::from_terms(vars, std::move(t));
}

// h -= c * m * g, all sorted under ord
OPoly axpy(const OPoly& h, const GaussRat& c, const Monomial& m, const OPoly& g,
           const MonomialOrder& ord) {
    OPoly out;
    out.reserve(h.size() + g.size());
    size_t i = 0, j = 0;
    while (i < h.size() && j < g.size()) {
        Monomial gm = g[j].m * m;
        int cv = ord.cmp(h[i].m, gm);
        if (cv > 0) {
            out.push_back(h[i++]);
        } else if (cv < 0) {
            out.push_back({std::move(gm), -(c * g[j].c)});
            ++j;
        } else {
            GaussRat s = h[i].c - c * g[j].c;
            if (!s.is_zero()) out.push_back({h[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < h.size(); ++i) out.push_back(h[i]);
    for (; j < g.size(); ++j) out.push_back({g[j].m * m, -(c * g[j].c)});
    return out;
}

// full reduction of f modulo G
OPoly reduce_full(OPoly f, const std::vector<OPoly>& G, const MonomialOrder& ord) {
    OPoly rem;
    size_t guard = 0;
    while (!f.empty()) {
        if (++guard > 2000000) throw ResourceError("division did not terminate within cap");
        bool hit = false;
        for (const auto& g : G) {
            if (g.empty()) continue;
            if (g[0].m.divides(f[0].m)) {
                f = axpy(f, f[0].c / g[0].c, f[0].m / g[0].m, g, ord);
                hit = true;
                break;
            }
        }
        if (!hit) {
            rem.push_back(f[0]);
            f.erase(f.begin());
        }
    }
    return rem;
}

OPoly s_poly(const OPoly& f, const OPoly& g, const MonomialOrder& ord) {
    Monomial l = lcm(f[0].m, g[0].m);
    OPoly lhs;
    lhs.reserve(f.size());
    Monomial mf = l / f[0].m;
    for (const auto& t : f) lhs.push_back({t.m * mf, t.c / f[0].c});
    std::sort(lhs.begin(), lhs.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
    return axpy(lhs, GaussRat(1) / g[0].c, l / g[0].m, g, ord);
}

void make_monic(OPoly& f) {
    if (f.empty()) return;
    GaussRat lc = f[0].c;
    for (auto& t : f) t.c /= lc;
}

struct SPair {
    size_t i, j;
    Monomial l;
};

// Buchberger with the Gebauer-Moeller pair update and normal selection.
std::vector<OPoly> buchberger_engine(std::vector<OPoly> input, const MonomialOrder& ord) {
    const auto& limits = groebner_limits();
    std::vector<OPoly> G;
    std::vector<SPair> pairs;

    auto update = [&](OPoly h) {
        // interreduce input lazily: h assumed nonzero, monic
        size_t t = G.size();
        const Monomial& lmh = h[0].m;
        std::vector<SPair> fresh;
        for (size_t i = 0; i < t; ++i) fresh.push_back({i, t, lcm(G[i][0].m, lmh)});
        // criterion M: drop (i,t) when another new pair's lcm strictly divides its lcm
        std::vector<char> keep(fresh.size(), 1);
        for (size_t a = 0; a < fresh.size(); ++a) {
            for (size_t b = 0; b < fresh.size() && keep[a]; ++b) {
                if (a == b || !keep[b]) continue;
                if (fresh[b].l.divides(fresh[a].l) && fresh[b].l != fresh[a].l) keep[a] = 0;
            }
        }
        // criterion F: one representative per lcm value
        for (size_t a = 0; a < fresh.size(); ++a) {
            if (!keep[a]) continue;
            for (size_t b = a + 1; b < fresh.size(); ++b) {
                if (keep[b] && fresh[b].l == fresh[a].l) keep[b] = 0;
            }
        }
        // product criterion
        for (size_t a = 0; a < fresh.size(); ++a) {
            if (keep[a] && coprime(G[fresh[a].i][0].m, lmh)) keep[a] = 0;
        }
        // criterion B on surviving old pairs
        std::vector<SPair> old;
        for (auto& p : pairs) {
            if (lmh.divides(p.l) && lcm(G[p.i][0].m, lmh) != p.l && lcm(G[p.j][0].m, lmh) != p.l)
                continue;
            old.push_back(std::move(p));
        }
        pairs = std::move(old);
        for (size_t a = 0; a < fresh.size(); ++a)
            if (keep[a]) pairs.push_back(std::move(fresh[a]));
        G.push_back(std::move(h));
        if (G.size() > limits.max_basis)
            throw ResourceError("Groebner basis size cap exceeded (" +
                                std::to_string(limits.max_basis) + ")");
    };

    for (auto& f : input) {
        if (f.empty()) continue;
        make_monic(f);
        update(std::move(f));
    }

    while (!pairs.empty()) {
        // normal strategy: smallest lcm under ord; ties by indices
        size_t best = 0;
        for (size_t a = 1; a < pairs.size(); ++a) {
            int c = ord.cmp(pairs[a].l, pairs[best].l);
            if (c < 0 || (c == 0 && std::tie(pairs[a].i, pairs[a].j) <
                                        std::tie(pairs[best].i, pairs[best].j)))
                best = a;
        }
        SPair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));
        OPoly s = s_poly(G[p.i], G[p.j], ord);
        OPoly r = reduce_full(std::move(s), G, ord);
        if (r.empty()) continue;
        if (r[0].m.deg > limits.max_degree)
            throw ResourceError("Groebner degree cap exceeded (" +
                                std::to_string(limits.max_degree) + ")");
        make_monic(r);
        update(std::move(r));
    }
    return G;
}

std::vector<OPoly> reduce_basis(std::vector<OPoly> G, const MonomialOrder& ord) {
    // drop generators whose leading monomial is divisible by another's
    std::vector<char> keep(G.size(), 1);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (G[j][0].m.divides(G[i][0].m) &&
                (G[j][0].m != G[i][0].m || j < i))
                keep[i] = 0;
        }
    }
    std::vector<OPoly> kept;
    for (size_t i = 0; i < G.size(); ++i)
        if (keep[i]) kept.push_back(std::move(G[i]));
    // tail-reduce each against the others
    std::vector<OPoly> out;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<OPoly> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        OPoly r = reduce_full(kept[i], others, ord);
        if (!r.empty()) {
            make_monic(r);
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const OPoly& a, const OPoly& b) { return ord.cmp(a[0].m, b[0].m) < 0; });
    return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& ord) {
    for (const auto& g : G)
        if (!g.is_zero() && !(*g.vars() == *f.vars()))
            throw InputError("normal_form: mismatched variable sets");
    std::vector<OPoly> basis;
    for (const auto& g : G)
        if (!g.is_zero()) basis.push_back(to_opoly(g, ord));
    return from_opoly(f.vars(), reduce_full(to_opoly(f, ord), basis, ord));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw InputError("s_polynomial of zero polynomial");
    return from_opoly(f.vars(), s_poly(to_opoly(f, ord), to_opoly(g, ord), ord));
}

std::vector<Polynomial> buchberger(const Ideal& I, const MonomialOrder& ord) {
    if (I.is_zero()) return {};
    std::vector<OPoly> input;
    for (const auto& g : I.gens()) input.push_back(to_opoly(g, ord));
    auto G = reduce_basis(buchberger_engine(std::move(input), ord), ord);
    std::vector<Polynomial> out;
    out.reserve(G.size());
    for (auto& g : G) out.push_back(from_opoly(I.vars(), std::move(g)));
    return out;
}

const std::vector<Polynomial>& Ideal::basis(const MonomialOrder& ord) const {
    auto it = cache_->find(ord.key());
    if (it == cache_->end()) it = cache_->emplace(ord.key(), buchberger(*this, ord)).first;
    return it->second;
}

bool ideal_member(const Polynomial& f, const Ideal& I) {
    if (f.is_zero()) return true;
    if (I.is_zero()) return false;
    MonomialOrder ord = MonomialOrder::grevlex();
    return normal_form(f, I.basis(ord), ord).is_zero();
}

bool contains_one(const Ideal& I) {
    for (const auto& g : I.gens())
        if (!g.is_zero() && g.is_constant()) return true;
    if (I.is_zero()) return false;
    const auto& gb = I.basis(MonomialOrder::grevlex());
    return gb.size() == 1 && gb[0].is_constant();
}

Ideal eliminate(const Ideal& I, const std::vector<uint8_t>& drop_mask) {
    if (drop_mask.size() != I.nvars()) throw InputError("eliminate: mask size mismatch");
    bool any = false;
    for (auto d : drop_mask) any = any || d;
    if (!any) return I;
    MonomialOrder ord = MonomialOrder::elim(drop_mask);
    std::vector<Polynomial> kept;
    for (const auto& g : I.basis(ord)) {
        bool pure = true;
        for (size_t v = 0; v < drop_mask.size() && pure; ++v)
            if (drop_mask[v] && g.involves(v)) pure = false;
        if (pure) kept.push_back(g);
    }
    return Ideal::make(I.vars(), std::move(kept));
}

namespace {

// append one fresh auxiliary variable; returns (extended ideal gens lifted, new vars)
std::pair<std::vector<Polynomial>, VarsPtr> lift_with_aux(const Ideal& I,
                                                          const std::string& aux) {
    VarsPtr ext = extend_vars(I.vars(), {aux}, 9);
    std::vector<size_t> map(I.nvars());
    for (size_t i = 0; i < I.nvars(); ++i) map[i] = i;
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(g.lift(ext, map));
    return {std::move(gens), std::move(ext)};
}

Ideal drop_last_var(const Ideal& I) {
    std::vector<uint8_t> keep(I.nvars(), 1);
    keep.back() = 0;
    std::vector<std::string> names(I.vars()->names.begin(), I.vars()->names.end() - 1);
    std::vector<int> block(I.vars()->block.begin(), I.vars()->block.end() - 1);
    return restrict_ideal(I, keep, make_vars(std::move(names), std::move(block)));
}

Ideal saturate_single(const Ideal& I, const Polynomial& h) {
    auto [gens, ext] = lift_with_aux(I, "@s");
    std::vector<size_t> map(I.nvars());
    for (size_t i = 0; i < I.nvars(); ++i) map[i] = i;
    Polynomial s = Polynomial::variable(ext, ext->size() - 1);
    gens.push_back(Polynomial::constant(ext, GaussRat(1)) - s * h.lift(ext, map));
    std::vector<uint8_t> drop(ext->size(), 0);
    drop.back() = 1;
    return drop_last_var(eliminate(Ideal::make(ext, std::move(gens)), drop));
}

}  // namespace

Ideal intersect(const Ideal& A, const Ideal& B) {
    if (!(*A.vars() == *B.vars())) throw InputError("intersect: mismatched variable sets");
    if (A.is_zero()) return A;
    if (B.is_zero()) return B;
    VarsPtr ext = extend_vars(A.vars(), {"@t"}, 9);
    std::vector<size_t> map(A.nvars());
    for (size_t i = 0; i < A.nvars(); ++i) map[i] = i;
    Polynomial t = Polynomial::variable(ext, ext->size() - 1);
    Polynomial omt = Polynomial::constant(ext, GaussRat(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& a : A.gens()) gens.push_back(t * a.lift(ext, map));
    for (const auto& b : B.gens()) gens.push_back(omt * b.lift(ext, map));
    std::vector<uint8_t> drop(ext->size(), 0);
    drop.back() = 1;
    return drop_last_var(eliminate(Ideal::make(ext, std::move(gens)), drop));
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    if (!(*I.vars() == *J.vars())) throw InputError("saturate: mismatched variable sets");
    if (J.is_zero()) throw InputError("saturate: saturating by the zero ideal");
    // dedupe monic generator representatives
    std::vector<Polynomial> hs;
    std::set<std::string> seen;
    for (const auto& h : J.gens()) {
        if (h.is_zero()) continue;
        if (h.is_constant()) {
            // saturating by a unit leaves I unchanged
            return Ideal::make(I.vars(), I.gens());
        }
        Polynomial m = h * h.terms()[0].c.inv();
        if (seen.insert(m.str()).second) hs.push_back(std::move(m));
    }
    if (hs.empty()) throw InputError("saturate: saturating by the zero ideal");
    Ideal acc = saturate_single(I, hs[0]);
    for (size_t i = 1; i < hs.size(); ++i) acc = intersect(acc, saturate_single(I, hs[i]));
    return acc;
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
    if (f.is_zero()) return true;
    auto [gens, ext] = lift_with_aux(I, "@w");
    std::vector<size_t> map(I.nvars());
    for (size_t i = 0; i < I.nvars(); ++i) map[i] = i;
    Polynomial w = Polynomial::variable(ext, ext->size() - 1);
    gens.push_back(Polynomial::constant(ext, GaussRat(1)) - w * f.lift(ext, map));
    return contains_one(Ideal::make(ext, std::move(gens)));
}

bool saturation_radical_membership(const Polynomial& f, const Ideal& I, const Polynomial& h) {
    if (f.is_zero()) return true;
    if (h.is_zero()) return true;  // I : 0^infty = <1>
    VarsPtr ext = extend_vars(I.vars(), {"@s", "@w"}, 9);
    std::vector<size_t> map(I.nvars());
    for (size_t i = 0; i < I.nvars(); ++i) map[i] = i;
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(g.lift(ext, map));
    Polynomial s = Polynomial::variable(ext, ext->size() - 2);
    Polynomial w = Polynomial::variable(ext, ext->size() - 1);
    Polynomial one = Polynomial::constant(ext, GaussRat(1));
    gens.push_back(one - s * h.lift(ext, map));
    gens.push_back(one - w * f.lift(ext, map));
    return contains_one(Ideal::make(ext, std::move(gens)));
}

int ideal_dimension(const Ideal& I) {
    size_t n = I.nvars();
    if (n > 24) throw ResourceError("ideal_dimension: too many variables");
    if (I.is_zero()) return static_cast<int>(n);
    const auto& gb = I.basis(MonomialOrder::grevlex());
    if (gb.size() == 1 && gb[0].is_constant())
        throw InputError("ideal_dimension: ideal is the whole ring (empty variety)");
    // supports of the leading monomials as bitmasks
    std::vector<uint32_t> supports;
    for (const auto& g : gb) {
        const Monomial& lm = g.terms()[0].m;
        uint32_t s = 0;
        for (size_t v = 0; v < n; ++v)
            if (lm.e[v] != 0) s |= (1u << v);
        supports.push_back(s);
    }
    int best = 0;
    for (uint32_t subset = 0; subset < (1u << n); ++subset) {
        int size = __builtin_popcount(subset);
        if (size <= best) continue;
        bool independent = true;
        for (uint32_t s : supports) {
            if ((s & ~subset) == 0) {  // support contained in subset
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

PolyMatrix jacobian(const Ideal& I, const std::vector<uint8_t>& wrt_mask) {
    if (wrt_mask.size() != I.nvars()) throw InputError("jacobian: mask size mismatch");
    PolyMatrix M;
    for (const auto& g : I.gens()) {
        std::vector<Polynomial> row;
        for (size_t v = 0; v < wrt_mask.size(); ++v)
            if (wrt_mask[v]) row.push_back(g.derivative(v));
        M.push_back(std::move(row));
    }
    return M;
}

Polynomial poly_det(const PolyMatrix& M) {
    size_t n = M.size();
    if (n == 0) throw InputError("poly_det: empty matrix");
    const VarsPtr& vars = M[0][0].vars();
    if (n == 1) return M[0][0];
    // Laplace expansion along the first row
    Polynomial det = Polynomial::zero(vars);
    for (size_t c = 0; c < n; ++c) {
        if (M[0][c].is_zero()) continue;
        PolyMatrix sub;
        for (size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(M[r][cc]);
            sub.push_back(std::move(row));
        }
        Polynomial cof = M[0][c] * poly_det(sub);
        det = (c % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

namespace {

void index_subsets(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
    std::vector<size_t> cur(k);
    // lexicographic enumeration
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i + (k - depth) <= n; ++i) {
            cur[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& M, size_t size) {
    size_t rows = M.size();
    size_t cols = rows ? M[0].size() : 0;
    if (size == 0 || size > rows || size > cols)
        throw InputError("minors: size out of range");
    std::vector<std::vector<size_t>> rsets, csets;
    index_subsets(rows, size, rsets);
    index_subsets(cols, size, csets);
    std::vector<Polynomial> out;
    for (const auto& rs : rsets) {
        for (const auto& cs : csets) {
            PolyMatrix sub;
            for (size_t r : rs) {
                std::vector<Polynomial> row;
                for (size_t c : cs) row.push_back(M[r][c]);
                sub.push_back(std::move(row));
            }
            out.push_back(poly_det(sub));
        }
    }
    return out;
}

Ideal restrict_ideal(const Ideal& I, const std::vector<uint8_t>& keep_mask, VarsPtr new_vars) {
    std::vector<GaussRat> zeros(I.nvars(), GaussRat(0));
    std::vector<uint8_t> drop(keep_mask.size());
    for (size_t i = 0; i < keep_mask.size(); ++i) drop[i] = keep_mask[i] ? 0 : 1;
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) {
        for (size_t v = 0; v < drop.size(); ++v)
            if (drop[v] && g.involves(v))
                throw InputError("restrict_ideal: generator involves dropped variable '" +
                                 I.vars()->names[v] + "'");
        gens.push_back(g.substitute(drop, zeros, new_vars));
    }
    return Ideal::make(std::move(new_vars), std::move(gens));
}

Ideal lift_ideal(const Ideal& I, const VarsPtr& new_vars) {
    std::vector<size_t> map(I.nvars());
    for (size_t i = 0; i < I.nvars(); ++i) {
        int idx = new_vars->index_of(I.vars()->names[i]);
        if (idx < 0)
            throw InputError("lift_ideal: variable '" + I.vars()->names[i] + "' missing");
        map[i] = static_cast<size_t>(idx);
    }
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(g.lift(new_vars, map));
    return Ideal::make(new_vars, std::move(gens));
}

std::string canonical_generator_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    Polynomial m = p * p.terms()[0].c.inv();
    // clear denominators of both rational components
    mpz_class l(1);
    for (const auto& t : m.terms()) {
        l = lcm(l, t.c.re.get_den());
        l = lcm(l, t.c.im.get_den());
    }
    return (m * GaussRat(mpq_class(l))).str();
}

std::vector<std::string> sorted_generator_strings(const Ideal& I) {
    std::vector<std::string> out;
    for (const auto& g : I.basis(MonomialOrder::grevlex()))
        out.push_back(canonical_generator_string(g));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cds
