#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iterator>

#include "dodgson/formal.hpp"
#include "dodgson/matrix.hpp"

using namespace dodgson;

namespace {

Int coeff(const FormalPoly& p, const Monomial& m) {
    auto it = p.terms().find(m);
    return it == p.terms().end() ? Int(0) : it->second;
}

}  // namespace

TEST_CASE("monomials sort their cells and render with exponents") {
    Monomial m({{2, 1}, {1, 2}, {2, 1}});
    CHECK(m.degree() == 3);
    CHECK(m.str() == "a(1,2)*a(2,1)^2");
    CHECK(Monomial{}.str() == "1");
    CHECK(Monomial{}.degree() == 0);
}

TEST_CASE("monomial merge is a multiset union") {
    Monomial a({{1, 1}, {2, 2}});
    Monomial b({{2, 2}, {3, 3}});
    CHECK(Monomial::merged(a, b).str() == "a(1,1)*a(2,2)^2*a(3,3)");
    CHECK(Monomial::merged(a, Monomial{}) == a);
    // merge order does not matter
    CHECK(Monomial::merged(a, b) == Monomial::merged(b, a));
}

TEST_CASE("cell ordering is row-major") {
    CHECK(Cell{1, 2} < Cell{2, 1});
    CHECK(Cell{2, 1} < Cell{2, 3});
}

TEST_CASE("polynomials cancel and drop zero terms") {
    FormalPoly p;
    Monomial m({{1, 1}});
    p.add_term(m, Int(3));
    p.add_term(m, Int(-3));
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);

    p.add_term(m, Int(0));
    CHECK(p.is_zero());
}

TEST_CASE("polynomial arithmetic") {
    Monomial x({{1, 1}});
    Monomial y({{2, 2}});
    FormalPoly p, q;
    p.add_term(x, Int(1));
    p.add_term(y, Int(2));
    q.add_term(y, Int(-2));
    q.add_term(Monomial{}, Int(5));

    FormalPoly sum = p + q;
    CHECK(sum.term_count() == 2);
    CHECK(coeff(sum, x) == 1);
    CHECK(coeff(sum, y) == 0);
    CHECK(coeff(sum, Monomial{}) == 5);

    CHECK((p - p).is_zero());

    // (x + 2y)(x - 2y) = x^2 - 4y^2
    FormalPoly r;
    r.add_term(x, Int(1));
    r.add_term(y, Int(-2));
    FormalPoly prod = p * r;
    CHECK(prod.term_count() == 2);
    CHECK(coeff(prod, Monomial::merged(x, x)) == 1);
    CHECK(coeff(prod, Monomial::merged(y, y)) == -4);
    CHECK(coeff(prod, Monomial::merged(x, y)) == 0);
}

TEST_CASE("multiplication distributes over addition on random-ish polys") {
    FormalPoly p, q, r;
    p.add_term(Monomial({{1, 1}}), Int(2));
    p.add_term(Monomial({{1, 2}}), Int(-1));
    q.add_term(Monomial({{2, 1}}), Int(3));
    q.add_term(Monomial{}, Int(1));
    r.add_term(Monomial({{2, 2}, {1, 1}}), Int(-4));
    r.add_term(Monomial({{1, 2}}), Int(7));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
}

TEST_CASE("evaluation substitutes matrix entries at 1-based cells") {
    Matrix m{{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}};
    // a(1,1)*a(2,2) - a(1,2)*a(2,1) = 4 - 6
    FormalPoly det2;
    det2.add_term(Monomial({{1, 1}, {2, 2}}), Int(1));
    det2.add_term(Monomial({{1, 2}, {2, 1}}), Int(-1));
    CHECK(det2.eval(m) == Scalar(-2));

    FormalPoly squared;
    squared.add_term(Monomial({{2, 2}, {2, 2}}), Int(3));
    CHECK(squared.eval(m) == Scalar(48));

    FormalPoly constant;
    constant.add_term(Monomial{}, Int(-7));
    CHECK(constant.eval(m) == Scalar(-7));
    CHECK(FormalPoly{}.eval(m) == Scalar(0));

    FormalPoly out_of_range;
    out_of_range.add_term(Monomial({{3, 1}}), Int(1));
    CHECK_THROWS_AS(out_of_range.eval(m), DimensionError);
}

TEST_CASE("terms() walks in monomial order") {
    FormalPoly p;
    p.add_term(Monomial({{2, 1}}), Int(1));
    p.add_term(Monomial({{1, 1}}), Int(1));
    const auto& terms = p.terms();
    REQUIRE(terms.size() == 2);
    CHECK(terms.begin()->first < std::next(terms.begin())->first);
}
