#include "specs.hpp"

#include "mvop/mvop.hpp"

#include <doctest.h>

using namespace mvop;

TEST_CASE("weight validation") {
    WeightSpec w = testgen::mu_one_spec(2, frac(1, 2));
    CHECK_NOTHROW(w.validate());
    WeightSpec bad = w;
    bad.delta[1] = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = w;
    bad.a.push_back(Q(1));
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = w;
    bad.nu = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = w;
    bad.a[0] = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("moments: closed form against term-by-term expansion") {
    testgen::Gen g(21);
    for (int t = 0; t < 12; ++t) {
        WeightSpec w = testgen::random_spec(g, static_cast<int>(g.integer(1, 4)));
        for (int s = 0; s <= 6; ++s) {
            MatQ m = moment(w, s);
            CHECK(m == moment_by_expansion(w, s));
            CHECK(m.is_symmetric());
            for (const Q& d : m.leading_minors()) CHECK(d > 0);
        }
        CHECK(h0_pochhammer_form(w, 1) == moment(w, 0));
    }
}

TEST_CASE("moments: N = 1 reduces to (nu+1)_{s+1}") {
    WeightSpec w = testgen::mu_one_spec(1, frac(5, 2));
    for (int s = 0; s < 6; ++s) CHECK(moment(w, s)(0, 0) == pochhammer(w.nu + 1, s + 1));
}

TEST_CASE("moment table bounds") {
    MomentTable t(testgen::mu_one_spec(2, Q(1)), 3);
    CHECK(t.depth() == 3);
    CHECK_THROWS_AS(t[4], std::out_of_range);
}

TEST_CASE("Gram-Schmidt oracle") {
    testgen::Gen g(33);
    for (int t = 0; t < 8; ++t) {
        const int N = static_cast<int>(g.integer(1, 3));
        WeightSpec w = testgen::random_spec(g, N);
        OPSeq seq = compute_monic_ops(w, 5);
        Report r = verify_orthogonality(seq, 5);
        r.merge(verify_three_term(seq));
        CHECK(r.all_pass());
        for (int n = 0; n <= 5; ++n) {
            CHECK(seq.P[n].degree() == n);
            CHECK(seq.P[n].coeff(n) == MatQ::identity(N));
        }
        // projection order does not matter
        OrthoOptions rev;
        rev.reverse_order = true;
        OPSeq other = compute_monic_ops(w, 5, rev);
        for (int n = 0; n <= 5; ++n) CHECK(other.P[n] == seq.P[n]);
    }
}

TEST_CASE("orthogonality report catches a perturbed polynomial") {
    OPSeq seq = compute_monic_ops(testgen::mu_one_spec(2, frac(1, 2)), 4);
    seq.P[2] += MatPoly::constant(MatQ::identity(2, frac(1, 7)));
    CHECK_FALSE(verify_orthogonality(seq, 4).all_pass());
}

TEST_CASE("scalar reduction") {
    for (const Q& nu : {frac(1, 2), Q(1), frac(5, 2)}) {
        OPSeq seq = compute_monic_ops(testgen::mu_one_spec(1, nu), 6);
        Report r = verify_scalar_reduction(seq);
        CHECK(r.all_pass());
        CHECK(seq.X[1](0, 0) == -(nu + 2));
    }
}

TEST_CASE("Jacobi operator acts as multiplication by x") {
    OPSeq seq = compute_monic_ops(testgen::mu_one_spec(3, Q(1)), 5);
    SeqOp L = jacobi_operator(seq);
    for (int n = 1; n < 5; ++n) {
        MatPoly lhs = seq.P[n].shift_up();
        MatPoly rhs = L.at(1, n) * seq.P[n + 1] + L.at(0, n) * seq.P[n] + L.at(-1, n) * seq.P[n - 1];
        CHECK(lhs == rhs);
    }
}
