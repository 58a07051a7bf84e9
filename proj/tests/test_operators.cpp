#include "specs.hpp"

#include "mvop/operators.hpp"

#include <doctest.h>

using namespace mvop;

TEST_CASE("operator suite on random weights") {
    testgen::Gen g(41);
    for (int t = 0; t < 6; ++t) {
        const int N = static_cast<int>(g.integer(1, 3));
        OPSeq seq = compute_monic_ops(testgen::random_spec(g, N), 5);
        Report r = operator_suite(seq);
        INFO("N = " << N);
        CHECK(r.verified());
        for (const char* id : {"adjoint_D_Ddag", "intertwine_D_M", "intertwine_Ddag_Mdag", "intertwine_D2_Gamma",
                               "intertwine_C_MC", "fla_A0n", "fla_A-1n", "Casimir", "P5.6_BJ", "MdL-1_corrected",
                               "P5.6_CJ_corrected"})
            CHECK(r.passed(id));
        CHECK(r.passed("negative_control_adjoint"));
    }
}

TEST_CASE("displayed MdL-1 and [C, J] brackets fail on the scalar case") {
    OPSeq seq = compute_monic_ops(testgen::mu_one_spec(1, frac(1, 2)), 5);
    Report r = operator_suite(seq);
    CHECK_FALSE(r.passed("MdL-1_claimed"));
    CHECK(r.passed("MdL-1_corrected"));
}

TEST_CASE("right action is linear and respects composition order") {
    testgen::Gen g(43);
    const int N = 2;
    WeightSpec w = testgen::random_spec(g, N);
    OPSeq seq = compute_monic_ops(w, 3);
    NamedOperators o = make_named_operators(seq);
    const MatPoly P = seq.P[2], R = seq.P[3];
    CHECK(act_right(P + R, o.D) == act_right(P, o.D) + act_right(R, o.D));
    CHECK(act_bracket(P, o.D, o.D).is_zero());
    CHECK(act_bracket(P, o.D, o.Ddag) == -act_bracket(P, o.Ddag, o.D));
}

TEST_CASE("dagger is an involution on difference operators") {
    OPSeq seq = compute_monic_ops(testgen::mu_one_spec(3, frac(5, 2)), 5);
    NamedOperators o = make_named_operators(seq);
    SeqOp back = o.M.dagger(seq.H, seq.Hinv).dagger(seq.H, seq.Hinv);
    CHECK(back.equal_on(o.M, 2, back.hi() - 2));
    CHECK(o.M.dagger(seq.H, seq.Hinv).equal_on(o.Mdag, 1, o.Mdag.hi() - 1));
}
