#include "mvop/lie.hpp"

#include <doctest.h>

using namespace mvop;

TEST_CASE("dimensions of g_phi") {
    const std::vector<std::pair<const char*, int>> expect{{"x", 3},    {"x^2", 4},   {"x^3", 5},         {"x^3+x^2", 6},
                                                          {"x^4+x", 6}, {"x^5", 7}, {"x^5+x^3+1", 7}};
    for (const auto& [s, dim] : expect) {
        RPoly phi = parse_poly(s);
        LieAlg g = g_phi(phi);
        INFO(s);
        CHECK(g.dim() == k_value(phi) + 2);
        CHECK(g.dim() == dim_formula(phi));
        CHECK(g.jacobi());
        CHECK(g.antisymmetric());
    }
    CHECK(g_phi(parse_poly("x^3")).dim() == 5);
    CHECK(g_phi(parse_poly("x^3+x^2")).dim() == 6);
}

TEST_CASE("bracket identities on generators") {
    const RPoly phi = parse_poly("x^3+x^2");
    const OpElement D = OpElement::D(), Dd = OpElement::Ddag(), x = OpElement::poly(RPoly::x());
    CHECK(bracket(D, Dd, phi) == bracket(Dd, D, phi) * Q(-1));
    CHECK(bracket(D, D, phi).is_zero());
    // [D, p] = -x p'
    CHECK(bracket(D, x, phi) == OpElement::poly(RPoly::x() * Q(-1)));
    // Jacobi on the three generators
    OpElement j = bracket(D, bracket(Dd, x, phi), phi) + bracket(Dd, bracket(x, D, phi), phi) +
                  bracket(x, bracket(D, Dd, phi), phi);
    CHECK(j.is_zero());
    CHECK_THROWS_AS(bracket(OpElement::D2(), D, phi, true), std::invalid_argument);
}

TEST_CASE("structure reports verify") {
    for (const char* s : {"x^2", "x^3", "x^4+x", "x^5+x^3+1"}) {
        INFO(s);
        CHECK(structure_report(parse_poly(s)).verified());
    }
    for (const Q& nu : {Q(1, 2), Q(3)}) {
        Report r = extended_algebra_report(nu);
        CHECK(r.verified());
        CHECK(r.passed("ext_sl2_corrected"));
        CHECK_FALSE(r.passed("ext_sl2_a_claimed"));
    }
}

TEST_CASE("isomorphism test") {
    const RPoly a = parse_poly("x^3"), b = parse_poly("2x^3"), c = parse_poly("x^3+x^2");
    CHECK(iso_test(a, a));
    CHECK(iso_test(a, b) == iso_test(b, a));
    CHECK_FALSE(iso_test(a, c));  // different dimensions
    CHECK(conformal_similar(MatQ::diag({Q(1), Q(2)}), MatQ::diag({Q(2), Q(4)})));
    CHECK_FALSE(conformal_similar(MatQ::diag({Q(1), Q(2)}), MatQ::diag({Q(1), Q(3)})));
}

TEST_CASE("truncated exponential closure grows") {
    int prev = 0;
    for (int T = 4; T <= 8; ++T) {
        int d = g_phi(truncated_exp(T)).dim();
        CHECK(d > prev);
        prev = d;
    }
}

TEST_CASE("json shape") {
    json j = lie_to_json(g_phi(parse_poly("x^3")));
    CHECK(j["dimension"] == 5);
    CHECK(j.contains("structure_constants"));
    CHECK(j.contains("center"));
}
