#include <doctest.h>

#include <random>

#include "ncplane/parse.hpp"

using namespace ncplane;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

NCPoly random_ncpoly(std::mt19937_64& rng, int m, const ParamList& ps, int max_terms,
                     int max_deg) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> wlen(0, max_deg);
    std::uniform_int_distribution<int> letter(0, m - 1);
    std::uniform_int_distribution<long long> coef(-9, 9);
    NCPoly f(m, ps);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Word w(static_cast<std::size_t>(wlen(rng)));
        for (auto& l : w) l = letter(rng);
        f.add_term(w, CoefPoly::constant(ps, rat(coef(rng))));
    }
    return f;
}

}  // namespace

TEST_CASE("parse the commutator") {
    const NCPoly f = nc_parse("x*y - y*x", 2, {});
    CHECK(f.terms().size() == 2);
    CHECK(f == commutator(NCPoly::generator(2, {}, 0), NCPoly::generator(2, {}, 1)));
    CHECK(f == nc_parse("[x,y]", 2, {}));
}

TEST_CASE("parse the smooth quadric with a parameter") {
    const ParamList ps{"d"};
    const NCPoly f = nc_parse("x^2+y^2-1+d*[x,y]", 2, ps);
    CHECK(f.terms().size() == 5);
    CHECK(f.coefficient(Word{0, 0}) == CoefPoly::constant(ps, rat(1)));
    CHECK(f.coefficient(Word{1, 1}) == CoefPoly::constant(ps, rat(1)));
    CHECK(f.coefficient(Word{}) == CoefPoly::constant(ps, rat(-1)));
    CHECK(f.coefficient(Word{0, 1}) == CoefPoly::param(ps, "d"));
    CHECK(f.coefficient(Word{1, 0}) == -CoefPoly::param(ps, "d"));
}

TEST_CASE("unknown symbol errors carry a position") {
    CHECK_THROWS_AS(nc_parse("x*z", 2, {}), parse_error);
    try {
        nc_parse("x*z", 2, {});
    } catch (const parse_error& e) {
        CHECK(e.position == 2);
    }
    CHECK_THROWS_AS(nc_parse("x*", 2, {}), parse_error);
    CHECK_THROWS_AS(nc_parse("x3", 2, {}), parse_error);  // generator out of range
}

TEST_CASE("x1..xm naming and the m=1 algebra") {
    const NCPoly f = nc_parse("x1*x2-x2*x1", 3, {});
    CHECK(f.generators() == 3);
    const NCPoly g = nc_parse("x1^2", 1, {});
    CHECK(g.degree() == 2);
}

TEST_CASE("paper factorization identity (xy+1)x = x(yx+1)") {
    const NCPoly lhs = nc_parse("(x*y+1)*x", 2, {});
    const NCPoly rhs = nc_parse("x*(y*x+1)", 2, {});
    CHECK(lhs == rhs);
    CHECK(lhs.terms().size() == 2);
    CHECK(lhs.coefficient(Word{0, 1, 0}) == CoefPoly(rat(1)));
    CHECK(lhs.coefficient(Word{0}) == CoefPoly(rat(1)));
}

TEST_CASE("multiplicative identity and degree cap") {
    std::mt19937_64 rng(3);
    const NCPoly one = NCPoly::constant(2, {}, rat(1));
    for (int i = 0; i < 20; ++i) {
        const NCPoly f = random_ncpoly(rng, 2, {}, 5, 6);
        CHECK(f * one == f);
        CHECK(one * f == f);
    }
    const NCPoly x = NCPoly::generator(2, {}, 0);
    NCPoly big = x;
    CHECK_THROWS_AS([&] {
        for (int i = 0; i < 40; ++i) big = big * x;
    }(), precondition_error);
}

TEST_CASE("commutator squared has the four expected words") {
    const NCPoly k = nc_parse("[x,y]", 2, {});
    const NCPoly k2 = k * k;
    CHECK(k2.terms().size() == 4);
    CHECK(k2.coefficient(Word{0, 1, 0, 1}) == CoefPoly(rat(1)));
    CHECK(k2.coefficient(Word{0, 1, 1, 0}) == CoefPoly(rat(-1)));
    CHECK(k2.coefficient(Word{1, 0, 0, 1}) == CoefPoly(rat(-1)));
    CHECK(k2.coefficient(Word{1, 0, 1, 0}) == CoefPoly(rat(1)));
    CHECK(k2 == nc_parse("[x,y]^2", 2, {}));
}

TEST_CASE("abelianization") {
    CHECK(nc_parse("[x,y]", 2, {}).abelianize().is_zero());

    const ParamList ps{"d"};
    const CoefPoly ab = nc_parse("x^2+y^2-1+d*[x,y]", 2, ps).abelianize();
    CHECK(ab == cpoly_parse("x^2+y^2-1", {"x", "y", "d"}));

    const ParamList qs{"q"};
    const CoefPoly cusp = nc_parse("y^2-x^3+q*[x,y]", 2, qs).abelianize();
    CHECK(cusp == cpoly_parse("y^2-x^3", {"x", "y", "q"}));
}

TEST_CASE("point evaluation") {
    const NCPoly cusp = nc_parse("y^2-x^3", 2, {});
    CHECK(cusp.eval_point(Point<Rational>(rat(1), rat(1))) == rat(0));

    const ParamList qs{"q"};
    const NCPoly qp = nc_parse("x*y-q*y*x", 2, qs);
    std::map<std::string, Rational> q1{{"q", rat(1)}};
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> v(-9, 9);
    for (int i = 0; i < 10; ++i)
        CHECK(qp.eval_point(Point<Rational>(rat(v(rng)), rat(v(rng))), q1) == rat(0));

    const NCPoly circle = nc_parse("x^2+y^2-1", 2, {});
    CHECK(circle.eval_point(Point<Rational>(rat(3, 5), rat(4, 5))) == rat(0));
}

TEST_CASE("matrix evaluation") {
    const ParamList qs{"q"};
    const NCPoly qp = nc_parse("x*y-q*y*x", 2, qs);
    Mat<Rational> x = Mat<Rational>::Zero(2, 2), y = Mat<Rational>::Zero(2, 2);
    x(0, 0) = rat(1);
    x(1, 1) = rat(-1);  // q = -1, lambda = 1
    y(0, 1) = rat(1);
    y(1, 0) = rat(1);  // gamma = 1
    const MatrixRep<Rational> rep({x, y});
    std::map<std::string, Rational> qm1{{"q", rat(-1)}};
    CHECK(is_zero_matrix(qp.eval_matrix(rep, qm1)));

    // commuting diagonals kill the commutator
    Mat<Rational> d1 = Mat<Rational>::Zero(2, 2), d2 = Mat<Rational>::Zero(2, 2);
    d1(0, 0) = rat(2);
    d1(1, 1) = rat(3);
    d2(0, 0) = rat(-1);
    d2(1, 1) = rat(5);
    CHECK(is_zero_matrix(nc_parse("[x,y]", 2, {}).eval_matrix(MatrixRep<Rational>({d1, d2}))));
}

TEST_CASE("cusp fiber matrices at kappa=1 satisfy the relation (complex backend)") {
    const NCPoly cusp = nc_parse("y^2-x^3", 2, {});
    const ComplexApprox w = root_of_unity(3);
    Mat<ComplexApprox> x(2, 2), y(2, 2);
    x << ComplexApprox(1.0), ComplexApprox(0.5), ComplexApprox(0.0), w;
    y << ComplexApprox(1.0), ComplexApprox(0.0), ComplexApprox(2.0), ComplexApprox(-1.0);
    CHECK(is_zero_matrix(cusp.eval_matrix(MatrixRep<ComplexApprox>({x, y}))));
}

TEST_CASE("n=1 matrix evaluation agrees with point evaluation") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long long> v(-9, 9);
    for (int i = 0; i < 30; ++i) {
        const NCPoly f = random_ncpoly(rng, 2, {}, 5, 5);
        const Rational a = rat(v(rng)), b = rat(v(rng));
        Mat<Rational> ma(1, 1), mb(1, 1);
        ma(0, 0) = a;
        mb(0, 0) = b;
        CHECK(f.eval_matrix(MatrixRep<Rational>({ma, mb}))(0, 0) ==
              f.eval_point(Point<Rational>(a, b)));
    }
}

TEST_CASE("matrix evaluation is an algebra homomorphism") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long long> v(-4, 4);
    for (int i = 0; i < 15; ++i) {
        const NCPoly f = random_ncpoly(rng, 2, {}, 4, 4);
        const NCPoly g = random_ncpoly(rng, 2, {}, 4, 4);
        Mat<Rational> x(2, 2), y(2, 2);
        x << rat(v(rng)), rat(v(rng)), rat(v(rng)), rat(v(rng));
        y << rat(v(rng)), rat(v(rng)), rat(v(rng)), rat(v(rng));
        const MatrixRep<Rational> rep({x, y});
        CHECK((f * g).eval_matrix(rep) == (f.eval_matrix(rep) * g.eval_matrix(rep)).eval());
    }
}

TEST_CASE("associativity of multiplication on random triples") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
        const NCPoly f = random_ncpoly(rng, 2, {}, 4, 3);
        const NCPoly g = random_ncpoly(rng, 2, {}, 4, 3);
        const NCPoly h = random_ncpoly(rng, 2, {}, 4, 3);
        CHECK((f * g) * h == f * (g * h));
        CHECK((f * g).abelianize() == f.abelianize() * g.abelianize());
    }
}

TEST_CASE("parser round-trip on random polynomials") {
    std::mt19937_64 rng(23);
    const ParamList ps{"d", "q"};
    for (int i = 0; i < 40; ++i) {
        NCPoly f = random_ncpoly(rng, 2, ps, 6, 6);
        // give some terms parameter coefficients
        f = f + NCPoly::generator(2, ps, 0).scaled(CoefPoly::param(ps, "d") *
                                                   CoefPoly::param(ps, "q"));
        const NCPoly g = nc_parse(f.str(), 2, ps);
        CHECK(f == g);
    }
    for (int i = 0; i < 20; ++i) {
        const NCPoly f = random_ncpoly(rng, 3, {}, 5, 5);
        CHECK(nc_parse(f.str(), 3, {}) == f);
    }
}
