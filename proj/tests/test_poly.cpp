#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cds/ideal.hpp"

using namespace cds;

namespace {

VarsPtr xyz() { return make_vars({"x", "y", "z"}); }

Polynomial P(const std::string& s, const VarsPtr& v) { return parse_polynomial(s, v); }

Ideal ideal_of(const VarsPtr& v, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(P(g, v));
    return Ideal::make(v, std::move(ps));
}

std::vector<std::string> strs(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(canonical_generator_string(p));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("gauss rational field arithmetic") {
    GaussRat a = parse_scalar("1/2+3i");
    GaussRat b = parse_scalar("2-i");
    CHECK((a * b) / b == a);
    CHECK((a + b) - b == a);
    CHECK(a * a.inv() == GaussRat(1));
    CHECK(parse_scalar("5i").norm() == 25);
    CHECK(GaussRat(mpq_class(3, 6)).str() == "1/2");
}

TEST_CASE("polynomial arithmetic and parsing") {
    auto v = xyz();
    CHECK(P("(x+y)^2", v) == P("x^2+2*x*y+y^2", v));
    CHECK((P("x^2-y", v) * P("x^2+y", v)) == P("x^4 - y^2", v));
    CHECK(P("x - x", v).is_zero());
    CHECK(P("x^2*y", v).total_degree() == 3);
    CHECK(P("x^2+y^2+z^2", v).derivative(0) == P("2*x", v));
    CHECK_THROWS_AS(P("x + q", v), InputError);
    CHECK_THROWS_AS(P("x +", v), InputError);

    // evaluation over Q(i)
    std::vector<GaussRat> pt = {parse_scalar("3"), parse_scalar("4"), parse_scalar("5i")};
    CHECK(P("x^2+y^2+z^2", v).eval(pt).is_zero());
}

TEST_CASE("monomial orders") {
    auto v = xyz();
    MonomialOrder lex = MonomialOrder::lex();
    MonomialOrder grevlex = MonomialOrder::grevlex();
    auto m = [&](const std::string& s) { return P(s, v).terms()[0].m; };
    CHECK(lex.greater(m("x"), m("y^5")));
    CHECK(grevlex.greater(m("y^5"), m("x")));
    CHECK(grevlex.greater(m("x*y"), m("z^2")));
    // elimination order: x-block dominates
    MonomialOrder elim = MonomialOrder::elim({1, 0, 0});
    CHECK(elim.greater(m("x"), m("y^9*z^9")));
}

TEST_CASE("normal_form examples") {
    auto v = xyz();
    MonomialOrder lex = MonomialOrder::lex();
    CHECK(normal_form(P("x", v), {P("x", v)}, lex).is_zero());
    CHECK(normal_form(P("x^2*y + 1", v), {P("x*y - 1", v)}, lex) == P("x + 1", v));
    CHECK(normal_form(P("7", v), {P("x", v), P("y", v)}, lex) == P("7", v));
}

TEST_CASE("normal_form is idempotent") {
    auto v = xyz();
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<Polynomial> G = {P("x^2 - y", v), P("x*y - z", v)};
    for (const auto& s : {"x^5 + y^3*z - 7*x*y", "x^2*y^2*z^2 + x + 1", "z^4 - x*y*z"}) {
        Polynomial r = normal_form(P(s, v), G, ord);
        CHECK(normal_form(r, G, ord) == r);
    }
}

TEST_CASE("buchberger examples") {
    auto v = xyz();
    SUBCASE("monomial ideal is its own reduced basis") {
        auto gb = buchberger(ideal_of(v, {"x", "y"}), MonomialOrder::lex());
        CHECK(strs(gb) == std::vector<std::string>{"x", "y"});
    }
    SUBCASE("lex basis of <x^2-y, x^3-z> eliminates to y^3 - z^2") {
        Ideal I = ideal_of(v, {"x^2 - y", "x^3 - z"});
        auto gb = buchberger(I, MonomialOrder::lex());
        // hand-derived elimination relation reduces to zero
        CHECK(normal_form(P("y^3 - z^2", v), gb, MonomialOrder::lex()).is_zero());
        bool found = false;
        for (const auto& g : gb) {
            if (!g.involves(0)) {
                CHECK(canonical_generator_string(g) == "y^3 - z^2");
                found = true;
            }
        }
        CHECK(found);
    }
    SUBCASE("grevlex basis of <x^2+y^2, xy>") {
        auto gb = buchberger(ideal_of(v, {"x^2 + y^2", "x*y"}), MonomialOrder::grevlex());
        // S(x^2+y^2, xy) = y^3 by hand
        CHECK(strs(gb) == std::vector<std::string>{"x*y", "x^2 + y^2", "y^3"});
    }
}

TEST_CASE("every S-polynomial of a computed basis reduces to zero") {
    auto v = xyz();
    std::vector<Ideal> corpus = {
        ideal_of(v, {"x^2 - y", "x^3 - z"}),
        ideal_of(v, {"x^2 + y^2 + z^2", "x*y - z^2"}),
        ideal_of(v, {"x^2 - y^2*z", "x*z - y"}),
    };
    for (const MonomialOrder& ord :
         {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::elim({1, 1, 0})}) {
        for (const auto& I : corpus) {
            auto gb = buchberger(I, ord);
            for (size_t i = 0; i < gb.size(); ++i)
                for (size_t j = i + 1; j < gb.size(); ++j)
                    CHECK(normal_form(s_polynomial(gb[i], gb[j], ord), gb, ord).is_zero());
        }
    }
}

TEST_CASE("eliminate examples") {
    auto v = make_vars({"t", "x", "y"});
    SUBCASE("twisted parabola") {
        Ideal I = ideal_of(v, {"x - t", "y - t^2"});
        Ideal E = eliminate(I, {1, 0, 0});
        REQUIRE(E.gens().size() == 1);
        CHECK(canonical_generator_string(E.gens()[0]) == "x^2 - y");
    }
    SUBCASE("empty drop set leaves the ideal unchanged") {
        Ideal I = ideal_of(v, {"x - t"});
        Ideal E = eliminate(I, {0, 0, 0});
        CHECK(strs(E.gens()) == strs(I.gens()));
    }
    SUBCASE("no relations among the remaining variables") {
        auto v2 = make_vars({"t", "x"});
        Ideal E = eliminate(ideal_of(v2, {"t"}), {1, 0});
        CHECK(E.is_zero());
    }
}

TEST_CASE("eliminate is monotone: generators stay in the ideal") {
    auto v = xyz();
    Ideal I = ideal_of(v, {"x^2 - y*z", "x*y - z^2", "y^2 - x*z"});
    Ideal E = eliminate(I, {1, 0, 0});
    for (const auto& g : E.gens()) CHECK(ideal_member(g, I));
}

TEST_CASE("saturate examples") {
    auto v = make_vars({"x", "y"});
    SUBCASE("hand factorization") {
        Ideal S = saturate(ideal_of(v, {"x*y"}), ideal_of(v, {"x"}));
        CHECK(strs(S.basis(MonomialOrder::grevlex())) == std::vector<std::string>{"y"});
    }
    SUBCASE("saturating by the unit ideal") {
        Ideal I = ideal_of(v, {"x^2 - y"});
        Ideal S = saturate(I, ideal_of(v, {"1"}));
        CHECK(strs(S.gens()) == strs(I.gens()));
    }
    SUBCASE("membership oracle for <x^2, xy> : x^infty") {
        // V(<x^2, xy>) is the line x = 0, which saturation by x removes
        // entirely, so the result contains x and y (indeed all of the ring).
        Ideal S = saturate(ideal_of(v, {"x^2", "x*y"}), ideal_of(v, {"x"}));
        CHECK(ideal_member(P("x", v), S));
        CHECK(ideal_member(P("y", v), S));
    }
    SUBCASE("saturation keeps the component off the saturating locus") {
        Ideal S = saturate(ideal_of(v, {"x^2*y"}), ideal_of(v, {"x"}));
        CHECK(strs(S.basis(MonomialOrder::grevlex())) == std::vector<std::string>{"y"});
        CHECK_FALSE(ideal_member(P("1", v), S));
    }
}

TEST_CASE("saturation contains I and is idempotent") {
    auto v = xyz();
    Ideal I = ideal_of(v, {"x^2 + y^2 + z^2", "2*x*y - 2*x*z"});
    Ideal J = ideal_of(v, {"x", "z"});
    Ideal S = saturate(I, J);
    for (const auto& g : I.gens()) CHECK(ideal_member(g, S));
    Ideal S2 = saturate(S, J);
    for (const auto& g : S.gens()) CHECK(ideal_member(g, S2));
    for (const auto& g : S2.gens()) CHECK(ideal_member(g, S));
}

TEST_CASE("radical membership") {
    auto v = xyz();
    CHECK(radical_membership(P("x", v), ideal_of(v, {"x^2"})));
    CHECK_FALSE(radical_membership(P("z", v), ideal_of(v, {"x^2 - y^2*z"})));
    CHECK(radical_membership(P("0", v), ideal_of(v, {"x^2 - y^2*z"})));
}

TEST_CASE("radical members vanish on sampled zeros") {
    auto v = xyz();
    Ideal I = ideal_of(v, {"x^2 - y^2*z"});
    Polynomial f = P("x^2 - y^2*z", v);  // trivially in sqrt(I)
    Polynomial g = P("x^3 - x*y^2*z", v);
    CHECK(radical_membership(g, I));
    // zeros of I on a rational grid: x = a*b, y = a, z = b^2
    for (long a = -3; a <= 3; ++a) {
        for (long b = -3; b <= 3; ++b) {
            std::vector<GaussRat> pt = {GaussRat(a * b), GaussRat(a), GaussRat(b * b)};
            CHECK(f.eval(pt).is_zero());
            CHECK(g.eval(pt).is_zero());
        }
    }
}

TEST_CASE("ideal dimension") {
    auto v = xyz();
    CHECK(ideal_dimension(ideal_of(v, {"x", "y", "z"})) == 0);
    CHECK(ideal_dimension(ideal_of(v, {"x^2 + y^2 + z^2"})) == 2);
    CHECK(ideal_dimension(ideal_of(v, {"x^2 - y^2*z"})) == 2);
    CHECK(ideal_dimension(Ideal::make(v, {})) == 3);
    CHECK_THROWS_AS(ideal_dimension(ideal_of(v, {"1"})), InputError);
    // nonconstant squarefree hypersurfaces have dimension n-1
    for (const auto& s : {"x + y", "x*y - z^2", "x^3 + y^3 + z^3 - x*y*z", "x^2 - y"})
        CHECK(ideal_dimension(ideal_of(v, {s})) == 2);
}

TEST_CASE("jacobian and minors") {
    auto v = xyz();
    std::vector<uint8_t> all = {1, 1, 1};
    SUBCASE("sphere gradient") {
        auto J = jacobian(ideal_of(v, {"x^2 + y^2 + z^2"}), all);
        REQUIRE(J.size() == 1);
        CHECK(J[0][0] == P("2*x", v));
        CHECK(J[0][1] == P("2*y", v));
        CHECK(J[0][2] == P("2*z", v));
    }
    SUBCASE("umbrella gradient") {
        auto J = jacobian(ideal_of(v, {"x^2 - y^2*z"}), all);
        CHECK(J[0][0] == P("2*x", v));
        CHECK(J[0][1] == P("-2*y*z", v));
        CHECK(J[0][2] == P("-y^2", v));
    }
    SUBCASE("identity pattern for linear generators") {
        auto J = jacobian(ideal_of(v, {"x", "y"}), all);
        CHECK(J[0][0] == P("1", v));
        CHECK(J[0][1].is_zero());
        CHECK(J[1][1] == P("1", v));
        CHECK(J[1][2].is_zero());
    }
    SUBCASE("determinantal examples") {
        auto w = make_vars({"x", "y", "z", "w"});
        PolyMatrix M = {{P("x", w), P("y", w)}, {P("z", w), P("w", w)}};
        auto m2 = minors(M, 2);
        REQUIRE(m2.size() == 1);
        CHECK(m2[0] == P("x*w - y*z", w));
        auto m1 = minors(M, 1);
        REQUIRE(m1.size() == 4);
        CHECK(m1[0] == P("x", w));
        CHECK(m1[3] == P("w", w));
        PolyMatrix I2 = {{P("1", w), P("0", w)}, {P("0", w), P("1", w)}};
        CHECK(minors(I2, 2)[0] == P("1", w));
        CHECK_THROWS_AS(minors(M, 3), InputError);
    }
}

TEST_CASE("resource caps abort predictably") {
    auto v = make_vars({"x", "y"});
    GroebnerLimits saved = groebner_limits();
    groebner_limits().max_degree = 3;
    CHECK_THROWS_AS(buchberger(ideal_of(v, {"x^5 - y", "x*y^4 - x - 1", "y^6 - x^3 - y"}),
                               MonomialOrder::lex()),
                    ResourceError);
    groebner_limits() = saved;
}
