#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "mlqs/polynomial.hpp"

using namespace mlqs;

namespace {
Polynomial x(int n, int i) { return Polynomial::variable(n, i); }
}

TEST_CASE("ring arithmetic") {
    const int n = 4;
    Polynomial p = (x(n, 1) + x(n, 2)) * (x(n, 1) - x(n, 2));
    CHECK(p == x(n, 1) * x(n, 1) - x(n, 2) * x(n, 2));
    CHECK(p + Polynomial::zero(n) == p);
    CHECK((p - p).is_zero());
    // The factored value of <2312>.
    Polynomial lhs = x(n, 1) * x(n, 3) * x(n, 3) * x(n, 4) + x(n, 1) * x(n, 2) * x(n, 3) * x(n, 4);
    Polynomial rhs = x(n, 1) * x(n, 3) * x(n, 4) * (x(n, 3) + x(n, 2));
    CHECK(lhs == rhs);
}

TEST_CASE("ambient mismatch is rejected") {
    CHECK_THROWS_AS(x(3, 1) + x(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(x(3, 1) * x(4, 1), std::invalid_argument);
}

TEST_CASE("cyclic variable indices") {
    CHECK(Monomial::variable(4, 5) == Monomial::variable(4, 1));
    CHECK(Monomial::variable(4, 0) == Monomial::variable(4, 4));
}

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_sym_prefix(0, 3, 5) == Polynomial::one(5));
    CHECK(elementary_sym_prefix(-1, 5, 5).is_zero());
    Polynomial e3 = elementary_sym_prefix(3, 5, 5);
    CHECK(e3.num_terms() == 10);
    for (const auto& t : e3.terms()) {
        CHECK(t.coeff == 1);
        CHECK(t.mono.degree() == 3);
        for (int i = 1; i <= 5; ++i) CHECK(t.mono.exponent(i) <= 1);
    }
    CHECK(elementary_sym_prefix(6, 5, 5).is_zero());
}

TEST_CASE("complete homogeneous polynomials") {
    CHECK(complete_hom_prefix(0, 3, 3) == Polynomial::one(3));
    CHECK(complete_hom_prefix(-2, 4, 4).is_zero());
    Polynomial h2 = complete_hom_prefix(2, 2, 2);
    Polynomial want = x(2, 1) * x(2, 1) + x(2, 1) * x(2, 2) + x(2, 2) * x(2, 2);
    CHECK(h2 == want);
    CHECK(complete_hom_prefix(3, 0, 2).is_zero());
}

TEST_CASE("determinants") {
    const int n = 3;
    Polynomial p = x(n, 1) + x(n, 2) * 2;
    CHECK(poly_det({{p}}) == p);
    std::vector<std::vector<Polynomial>> id(3, std::vector<Polynomial>(3, Polynomial::zero(n)));
    for (int i = 0; i < 3; ++i) id[i][i] = Polynomial::one(n);
    CHECK(poly_det(id) == Polynomial::one(n));
    // det [[h1(x1), 1], [h2(x1), h1(x1,x2)]] = h1(x1) h1(x1,x2) - h2(x1).
    std::vector<std::vector<Polynomial>> m = {
        {complete_hom_prefix(1, 1, n), Polynomial::one(n)},
        {complete_hom_prefix(2, 1, n), complete_hom_prefix(1, 2, n)},
    };
    Polynomial want =
        complete_hom_prefix(1, 1, n) * complete_hom_prefix(1, 2, n) - complete_hom_prefix(2, 1, n);
    CHECK(poly_det(m) == want);
    CHECK_THROWS_AS(poly_det({{p, p}}), std::invalid_argument);
}

TEST_CASE("canonical text format") {
    const int n = 3;
    Polynomial p = x(n, 1) * x(n, 1) - x(n, 2) * 2 + Polynomial::constant(n, 1);
    CHECK(p.str() == "x1^2 - 2*x2 + 1");
    CHECK(Polynomial::parse(p.str(), n) == p);
    CHECK(Polynomial::zero(n).str() == "0");
    CHECK(Polynomial::parse("0", n).is_zero());
}

TEST_CASE("json format") {
    const int n = 2;
    Polynomial p = x(n, 1) * 3 - x(n, 2) * x(n, 2);
    CHECK(p.to_json() == R"({"n":2,"terms":[{"c":3,"e":[1,0]},{"c":-1,"e":[0,2]}]})");
    CHECK(Polynomial::from_json(p.to_json()) == p);
}

TEST_CASE("coefficient overflow is detected") {
    const int n = 1;
    Polynomial big = Polynomial::constant(n, 1);
    Polynomial four = Polynomial::constant(n, 4);
    CHECK_THROWS_AS([&] {
        for (int i = 0; i < 40; ++i) big = big * four;
    }(), std::overflow_error);
}

TEST_CASE("all-ones evaluation") {
    CHECK(elementary_sym_prefix(2, 4, 4).eval_all_ones() == 6);
    CHECK(complete_hom_prefix(2, 3, 3).eval_all_ones() == 6);
}

TEST_CASE("variable shift") {
    const int n = 3;
    Polynomial p = x(n, 2) * x(n, 2) + x(n, 3);
    CHECK(p.shift_variables(-1) == x(n, 1) * x(n, 1) + x(n, 2));
    CHECK(p.shift_variables(1).shift_variables(-1) == p);
    CHECK(p.shift_variables(3) == p);
}
