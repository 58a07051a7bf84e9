#include "gen.hpp"

#include "mvop/scalar.hpp"

#include <doctest.h>

using namespace mvop;

TEST_CASE("rational strings") {
    CHECK(to_string(frac(6, 4)) == "3/2");
    CHECK(to_string(Q(-7)) == "-7");
    CHECK(to_string(frac(4, 2)) == "2");
    CHECK(parse_rational(" -3/6 ") == frac(-1, 2));
    CHECK(parse_rational("5") == 5);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    auto v = parse_rational_list("1,-1/2, 3");
    REQUIRE(v.size() == 3);
    CHECK(v[1] == frac(-1, 2));

    testgen::Gen g;
    for (int t = 0; t < 200; ++t) {
        Q q = g.rational(1000, 997);
        CHECK(parse_rational(to_string(q)) == q);
    }
}

TEST_CASE("pochhammer and factorial") {
    CHECK(pochhammer(Q(3), 0) == 1);
    CHECK(pochhammer(Q(1), 5) == 120);
    CHECK(pochhammer(Q(-2), 3) == 0);
    CHECK(factorial(20) == Z("2432902008176640000"));
    testgen::Gen g;
    for (int t = 0; t < 50; ++t) {
        Q a = g.rational();
        long n = g.integer(0, 8);
        CHECK(pochhammer(a, n + 1) == pochhammer(a, n) * (a + n));
    }
}

TEST_CASE("polynomial arithmetic is evaluation-compatible") {
    testgen::Gen g(7);
    auto rp = [&](int deg) {
        std::vector<Q> c;
        for (int k = 0; k <= deg; ++k) c.push_back(g.rational());
        return RPoly(c);
    };
    for (int t = 0; t < 40; ++t) {
        RPoly p = rp(static_cast<int>(g.integer(0, 5))), q = rp(static_cast<int>(g.integer(0, 5)));
        Q x = g.rational();
        CHECK((p * q)(x) == p(x) * q(x));
        CHECK((p + q)(x) == p(x) + q(x));
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    }
    CHECK(RPoly().degree() == -1);
    CHECK((RPoly::x() - RPoly::x()).is_zero());
}

TEST_CASE("polynomial parsing") {
    CHECK(parse_poly("x^3+x^2") == RPoly::monomial(Q(1), 3) + RPoly::monomial(Q(1), 2));
    CHECK(parse_poly(" -1/2x^4 + 3*x - 1") ==
          RPoly::monomial(frac(-1, 2), 4) + RPoly::monomial(Q(3), 1) + RPoly::constant(Q(-1)));
    CHECK(parse_poly("x") == RPoly::x());
    CHECK(parse_poly("7") == RPoly::constant(Q(7)));
    for (const char* bad : {"x^^3", "x^", "3y", "x^-1", "", "+", "x^3 x"})
        CHECK_THROWS_AS(parse_poly(bad), std::invalid_argument);
}

TEST_CASE("Laguerre polynomials") {
    testgen::Gen g(11);
    for (int t = 0; t < 20; ++t) {
        Q alpha = g.positive();
        long n = g.integer(0, 7);
        RPoly L = laguerre_poly(alpha, n);
        CHECK(L.degree() == n);
        CHECK(L(Q(0)) == pochhammer(alpha + 1, n) / Q(factorial(n)));
        // x y'' + (alpha + 1 - x) y' + n y = 0
        RPoly ode = RPoly::x() * L.derivative(2) + (RPoly::constant(alpha + 1) - RPoly::x()) * L.derivative() +
                    L * Q(n);
        CHECK(ode.is_zero());
        CHECK(laguerre_derivative(alpha, n) == L.derivative());
        if (n >= 1) CHECK(L.derivative() == -laguerre_poly(alpha + 1, n - 1));
    }
    CHECK(laguerre_poly(Q(0), 1) == RPoly(std::vector<Q>{Q(1), Q(-1)}));
}

TEST_CASE("dual Hahn: series against recurrence") {
    CHECK(dual_hahn(0, Q(2), Q(1), Q(0), 3) == 1);
    for (long M : {1L, 2L, 3L, 4L})
        for (const Q& gamma : {Q(0), frac(1, 2), Q(2)})
            for (const Q& delta : {Q(-1), Q(0), frac(3, 2)})
                for (long x = 0; x <= M; ++x) {
                    const Q lambda = Q(x) * (Q(x) + gamma + delta + 1);
                    const auto s = dual_hahn_s(M, lambda, gamma, delta, M);
                    for (long k = 0; k <= M; ++k) {
                        const Q norm = pochhammer(gamma + 1, k) * pochhammer(Q(-M), k);
                        CHECK(dual_hahn(k, Q(x), gamma, delta, M) * norm == s[k]);
                        CHECK(dual_hahn_lambda(k, lambda, gamma, delta, M) == dual_hahn(k, Q(x), gamma, delta, M));
                    }
                }
}

TEST_CASE("dual Hahn: vanishing lower parameter") {
    // gamma + 1 = 0 makes the second term divide by zero
    CHECK_THROWS_AS(dual_hahn(2, frac(1, 3), Q(-1), Q(0), 3), std::domain_error);
}
