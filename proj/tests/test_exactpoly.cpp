#include "doctest.h"

#include <random>
#include <vector>

#include "eqschub/linear_solve.hpp"
#include "eqschub/polynomial.hpp"

using namespace eqschub;

namespace {

poly random_poly(std::mt19937& gen, int n_terms = 5) {
    const std::vector<variable> vars = {T_(1), T_(2), x_(1), h_(1), e_(2), q_(), a_(-1)};
    poly f;
    for (int t = 0; t < n_terms; ++t) {
        monomial m;
        for (const variable& v : vars)
            if (gen() % 3 == 0) m = m * monomial::of(v, 1 + static_cast<int>(gen() % 2));
        const long c = static_cast<long>(gen() % 9) - 4;
        if (c != 0) f.add_term(m, ZZ(c));
    }
    return f;
}

} // namespace

TEST_CASE("monomial product merges exponents and divide inverts it") {
    const monomial a = monomial::of(T_(1), 2) * monomial::of(x_(1));
    const monomial b = monomial::of(T_(1)) * monomial::of(h_(2), 3);
    const monomial ab = a * b;
    CHECK(ab.deg(T_(1)) == 3);
    CHECK(ab.deg(x_(1)) == 1);
    CHECK(ab.deg(family::h) == 3);
    CHECK(ab.deg() == 7);
    REQUIRE(ab.divide(b).has_value());
    CHECK(*ab.divide(b) == a);
    CHECK(!a.divide(b).has_value());
    CHECK(b.divides(ab));
    CHECK(ab.part(family::h) == monomial::of(h_(2), 3));
    CHECK(ab.without(family::h) == monomial::of(T_(1), 3) * monomial::of(x_(1)));
    CHECK(monomial::of(q_(), 0).is_unit());
}

TEST_CASE("term order scans generator families before coefficients") {
    // h before e before x before q before T before a; a scans by descending index.
    CHECK(cmp(monomial::of(h_(1)), monomial::of(e_(1))) > 0);
    CHECK(cmp(monomial::of(e_(1)), monomial::of(x_(1))) > 0);
    CHECK(cmp(monomial::of(x_(1)), monomial::of(q_())) > 0);
    CHECK(cmp(monomial::of(q_()), monomial::of(T_(1))) > 0);
    CHECK(cmp(monomial::of(T_(1)), monomial::of(a_(5))) > 0);
    CHECK(cmp(monomial::of(T_(1)), monomial::of(T_(2))) > 0);
    CHECK(cmp(monomial::of(a_(2)), monomial::of(a_(1))) > 0);
    CHECK(cmp(monomial::of(x_(1), 2), monomial::of(x_(1))) > 0);
    CHECK(cmp(monomial::unit(), monomial::unit()) == 0);
}

TEST_CASE("canonical rendering matches the documented contract") {
    CHECK((poly::var(T_(1)) - poly::var(T_(2))).str() == "T1 - T2");
    CHECK((poly::var(a_(2)) - poly::var(a_(1))).str() == "a2 - a1");
    const poly sq = (poly::var(x_(1)) - poly::var(T_(2))) * (poly::var(x_(1)) - poly::var(T_(2)));
    CHECK(sq.str() == "x1^2 - 2*T2*x1 + T2^2");
    const poly rel = poly::var(e_(1), 2) - poly::var(T_(1)) * poly::var(e_(1)) +
                     poly::var(T_(2)) * poly::var(e_(1)) - poly::var(q_());
    CHECK(rel.str() == "e1^2 - T1*e1 + T2*e1 - q");
    CHECK(poly::zero().str() == "0");
    CHECK(poly::constant(-7).str() == "-7");
    CHECK((poly::constant(3) * poly::var(T_(1), 2) * poly::var(x_(1))).str() == "3*T1^2*x1");
    CHECK(poly::constant(1).str() == "1");
    CHECK((-poly::var(q_())).str() == "-q");
}

TEST_CASE("parse inverts rendering") {
    for (const char* text :
         {"T1 - T2", "x1^2 - 2*T2*x1 + T2^2", "e1^2 - T1*e1 + T2*e1 - q", "a2 - a1", "0", "1",
          "-7", "3*T1^2*x1", "q", "-q", "h3 + 5*a-2", "x1*x2 - a-1^2"}) {
        CAPTURE(text);
        CHECK(poly::parse(text).str() == text);
    }
    CHECK(poly::parse("") == poly::zero());
    CHECK(poly::parse("+3 - 1") == poly::constant(2));
    CHECK_THROWS_AS(poly::parse("T"), usage_error);
    CHECK_THROWS_AS(poly::parse("1 +"), usage_error);
    CHECK_THROWS_AS(poly::parse("z1"), usage_error);

    std::mt19937 gen(7);
    for (int i = 0; i < 50; ++i) {
        const poly f = random_poly(gen);
        CHECK(poly::parse(f.str()) == f);
    }
}

TEST_CASE("arithmetic satisfies the commutative ring axioms") {
    std::mt19937 gen(42);
    for (int i = 0; i < 30; ++i) {
        const poly f = random_poly(gen), g = random_poly(gen), h = random_poly(gen);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f - f).is_zero());
        CHECK(f * poly::constant(1) == f);
        CHECK((f * poly::zero()).is_zero());
    }
}

TEST_CASE("substitution replaces a variable by a polynomial") {
    const poly f = poly::var(x_(1), 2) + poly::constant(2) * poly::var(x_(1)) * poly::var(T_(1));
    const poly image = f.substitute({{x_(1), poly::var(T_(2))}});
    CHECK(image == poly::var(T_(2), 2) + poly::constant(2) * poly::var(T_(1)) * poly::var(T_(2)));
    // untouched variables stay
    CHECK(f.substitute({{h_(1), poly::zero()}}) == f);
    // substituting zero kills every term containing the variable
    CHECK(f.substitute({{x_(1), poly::zero()}}).is_zero());
}

TEST_CASE("divide_exact recovers factors and rejects non-divisors") {
    std::mt19937 gen(99);
    for (int i = 0; i < 30; ++i) {
        poly f = random_poly(gen), g = random_poly(gen);
        if (g.is_zero()) g = poly::constant(1);
        const auto back = (f * g).divide_exact(g);
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    const poly nd = poly::var(x_(1)) * poly::var(x_(2)) + poly::constant(1);
    CHECK(!nd.divide_exact(poly::var(x_(1))).has_value());
    CHECK(!poly::constant(3).divide_exact(poly::constant(2)).has_value()); // over ZZ
    const auto half = rationalize(poly::constant(3)).divide_exact(rationalize(poly::constant(2)));
    REQUIRE(half.has_value());
    CHECK(*half == polyq::constant(QQ(3, 2))); // over QQ
}

TEST_CASE("weighted grading counts h and e by index and q by its weight") {
    const grading g{4};
    const poly f = poly::var(h_(3)) * poly::var(T_(1));
    CHECK(f.homogeneous_grade(g) == 4);
    CHECK((poly::var(q_()) + poly::var(e_(2), 2)).homogeneous_grade(g) == 4);
    CHECK(!(poly::var(q_()) + poly::var(T_(1))).homogeneous_grade(g).has_value());
    CHECK(poly::zero().homogeneous_grade(g).has_value());
    CHECK(pow(poly::var(T_(1)) + poly::var(T_(2)), 3).homogeneous_grade(g) == 3);
}

TEST_CASE("integer conversion checks exactness") {
    CHECK(to_integer(QQ(6, 3)) == ZZ(2));
    CHECK_THROWS_AS(to_integer(QQ(1, 2)), internal_error);
    CHECK(is_integral(QQ(4, 2)));
    CHECK(!is_integral(QQ(1, 3)));
    const polyq f = rationalize(poly::parse("T1 - 2*T2"));
    CHECK(integralize(f) == poly::parse("T1 - 2*T2"));
    polyq bad = f;
    bad.add_term(monomial::of(T_(3)), QQ(1, 2));
    CHECK_THROWS_AS(integralize(bad), internal_error);
}

TEST_CASE("exact linear solve finds, verifies, and rejects") {
    // x + 2y = 5, 3x - y = 1  ->  x = 1, y = 2
    linear_system sys(2);
    sys.add_row({{0, QQ(1)}, {1, QQ(2)}}, QQ(5));
    sys.add_row({{0, QQ(3)}, {1, QQ(-1)}}, QQ(1));
    const linear_solution sol = solve_exact(sys);
    CHECK(sol.value == std::vector<QQ>{QQ(1), QQ(2)});
    CHECK(sol.kernel_rank == 0);

    // inconsistent
    linear_system bad(1);
    bad.add_row({{0, QQ(1)}}, QQ(1));
    bad.add_row({{0, QQ(1)}}, QQ(2));
    CHECK_THROWS_AS(solve_exact(bad), inconsistent_system);

    // underdetermined: pivots prefer earlier columns, free unknowns are zero
    linear_system und(3);
    und.add_row({{0, QQ(1)}, {1, QQ(1)}, {2, QQ(1)}}, QQ(3));
    const linear_solution us = solve_exact(und);
    CHECK(us.value == std::vector<QQ>{QQ(3), QQ(0), QQ(0)});
    CHECK(us.kernel_rank == 2);

    const auto kern = kernel_basis(und);
    REQUIRE(kern.size() == 2);
    for (const auto& v : kern) CHECK(v[0] + v[1] + v[2] == 0);
}

TEST_CASE("rationalize and integralize are mutually inverse on integer input") {
    std::mt19937 gen(5);
    for (int i = 0; i < 20; ++i) {
        const poly f = random_poly(gen);
        CHECK(integralize(rationalize(f)) == f);
    }
}
