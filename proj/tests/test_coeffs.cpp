#include <doctest.h>

#include <random>

#include "ncplane/coefpoly.hpp"

using namespace ncplane;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

CoefPoly random_poly(std::mt19937_64& rng, const ParamList& params, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expd(0, max_deg);
    std::uniform_int_distribution<long long> coef(-9, 9);
    CoefPoly p(params);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ExpVec e(params.size());
        for (auto& x : e) x = static_cast<std::uint32_t>(expd(rng));
        p.add_term(e, rat(coef(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK((rat(3, 5) + rat(4, 5)) == rat(7, 5));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(Rational::parse("3/5") == rat(3, 5));
    CHECK(Rational::parse("-7") == rat(-7));
    CHECK(rat(-1, 2).str() == "-1/2");
    CHECK(rat(9, 4).sqrt_exact().value() == rat(3, 2));
    CHECK(!rat(2).sqrt_exact().has_value());
    CHECK(!rat(-4).sqrt_exact().has_value());
    CHECK_THROWS_AS(Rational::parse("1/0"), precondition_error);
}

TEST_CASE("complex approx equality and sqrt") {
    ComplexApprox a(1.0, 2.0);
    ComplexApprox b(1.0 + 1e-12, 2.0 - 1e-12);
    CHECK(a == b);
    CHECK(a != ComplexApprox(1.0, 2.1));
    const ComplexApprox r = ComplexApprox(-1.0, 0.0).sqrt();
    CHECK(r == ComplexApprox(0.0, 1.0));
    const ComplexApprox z = root_of_unity(3);
    CHECK(z * z * z == ComplexApprox(1.0));
    CHECK(ComplexApprox::parse("0.5-2i") == ComplexApprox(0.5, -2.0));
    CHECK(ComplexApprox::parse("3/4") == ComplexApprox(0.75));
}

TEST_CASE("monomial product and additive inverse") {
    const ParamList ps{"d"};
    const CoefPoly d = CoefPoly::param(ps, "d");
    const CoefPoly d2 = d * d;
    CHECK(d2.degree() == 2);
    CHECK(d2.str() == "d^2");

    const CoefPoly two_d = CoefPoly::constant(ps, rat(2)) * d;
    CHECK((two_d + (-two_d)).is_zero());
}

TEST_CASE("schoolbook expansion of (t_X^2-4d_X)(t_Y^2-4d_Y)") {
    const ParamList ps{"t_X", "d_X", "t_Y", "d_Y"};
    auto v = [&](const char* n) { return CoefPoly::param(ps, n); };
    const CoefPoly four = CoefPoly::constant(ps, rat(4));
    const CoefPoly lhs = (v("t_X") * v("t_X") - four * v("d_X")) *
                         (v("t_Y") * v("t_Y") - four * v("d_Y"));
    CHECK(lhs.terms().size() == 4);
    // hand expansion
    CoefPoly expect(ps);
    expect.add_term({2, 0, 2, 0}, rat(1));
    expect.add_term({2, 0, 0, 1}, rat(-4));
    expect.add_term({0, 1, 2, 0}, rat(-4));
    expect.add_term({0, 1, 0, 1}, rat(16));
    CHECK(lhs == expect);
}

TEST_CASE("evaluation") {
    const ParamList ps{"d"};
    const CoefPoly d2 = CoefPoly::param(ps, "d") * CoefPoly::param(ps, "d");
    std::map<std::string, Rational> at3{{"d", rat(3)}};
    CHECK(d2.eval(at3) == rat(9));

    CHECK(CoefPoly(ps).eval(at3) == rat(0));  // empty polynomial

    std::map<std::string, Rational> missing;
    CHECK_THROWS_AS(d2.eval(missing), context_error);

    // cleared form of the quantum-plane family: 4q dX dY - (q-1) at q=2, dX=1/2, dY=1/4
    const ParamList qs{"q", "d_X", "d_Y"};
    const CoefPoly cleared = CoefPoly::constant(qs, rat(4)) * CoefPoly::param(qs, "q") *
                                 CoefPoly::param(qs, "d_X") * CoefPoly::param(qs, "d_Y") -
                             (CoefPoly::param(qs, "q") - CoefPoly::constant(qs, rat(1)));
    std::map<std::string, Rational> sol{{"q", rat(2)}, {"d_X", rat(1, 2)}, {"d_Y", rat(1, 4)}};
    CHECK(cleared.eval(sol) == rat(0));
}

TEST_CASE("context mismatch raises") {
    const CoefPoly a = CoefPoly::param({"a"}, "a");
    const CoefPoly b = CoefPoly::param({"b"}, "b");
    CHECK_THROWS_AS(a + b, context_error);
    // constants move across contexts
    CHECK((a + CoefPoly(rat(1))).terms().size() == 2);
}

TEST_CASE("ring axioms on randomized triples") {
    std::mt19937_64 rng(42);
    const ParamList ps{"a", "b"};
    for (int i = 0; i < 60; ++i) {
        const CoefPoly p = random_poly(rng, ps, 4, 3);
        const CoefPoly q = random_poly(rng, ps, 4, 3);
        const CoefPoly r = random_poly(rng, ps, 4, 3);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == q + p);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(7);
    const ParamList ps{"a", "b"};
    std::uniform_int_distribution<long long> val(-5, 5);
    for (int i = 0; i < 60; ++i) {
        const CoefPoly p = random_poly(rng, ps, 4, 3);
        const CoefPoly q = random_poly(rng, ps, 4, 3);
        std::map<std::string, Rational> at{{"a", rat(val(rng))}, {"b", rat(val(rng))}};
        CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
        CHECK((p + q).eval(at) == p.eval(at) + q.eval(at));
    }
}

TEST_CASE("complex arithmetic tracks exact values within tol") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> num(-20, 20);
    for (int i = 0; i < 50; ++i) {
        const Rational a = rat(num(rng), 7), b = rat(num(rng), 3);
        const ComplexApprox ca(a), cb(b);
        CHECK(ca * cb == ComplexApprox(a * b));
        CHECK(ca + cb == ComplexApprox(a + b));
    }
}

TEST_CASE("canonical rendering") {
    const ParamList ps{"t_X", "d_X"};
    const CoefPoly p = CoefPoly::param(ps, "t_X") * CoefPoly::param(ps, "t_X") -
                       CoefPoly::constant(ps, rat(4)) * CoefPoly::param(ps, "d_X");
    CHECK(p.str() == "t_X^2 - 4*d_X");
    CHECK(CoefPoly(ParamList{}).str() == "0");
    CHECK(cpoly_parse("t_X^2 - 4*d_X", ps) == p);
}

TEST_CASE("substitution") {
    const ParamList five{"t_X", "d_X", "t_Y", "d_Y", "t_XY"};
    const ParamList small{"t_X", "t_XY"};
    const CoefPoly dxy = cpoly_parse("d_X*d_Y", five);
    // d_X -> t_X^2, d_Y -> t_X^3
    std::map<std::string, CoefPoly> images{{"d_X", cpoly_parse("t_X^2", small)},
                                           {"d_Y", cpoly_parse("t_X^3", small)}};
    CHECK(dxy.subst(small, images) == cpoly_parse("t_X^5", small));
}
