#include "specs.hpp"

#include "mvop/laguerre.hpp"

#include <doctest.h>

using namespace mvop;

TEST_CASE("Laguerre suite on random weights") {
    testgen::Gen g(51);
    for (int t = 0; t < 6; ++t) {
        const int N = static_cast<int>(g.integer(1, 3));
        OPSeq seq = compute_monic_ops(testgen::random_spec(g, N), 5);
        Report r = laguerre_suite(seq);
        INFO("N = " << N);
        CHECK(r.verified());
        for (const char* id : {"R_laguerre_proportional", "R_zero_pattern", "xi_recursion_equals_extraction",
                               "G_diagonal", "I_bidiagonal", "recHn", "H0_closed_form"})
            CHECK(r.passed(id));
    }
}

TEST_CASE("xi table") {
    XiTable t(2, 3);
    t.at(1, 2, 1) = frac(3, 4);
    CHECK(t.get(1, 2, 1) == frac(3, 4));
    CHECK(t.get(9, 1, 1) == 0);
    CHECK_THROWS(t.at(0, 3, 1));
    const std::string csv = xi_to_csv(t);
    CHECK(csv.rfind("n,i,j,xi\n", 0) == 0);
    CHECK(csv.find("1,2,1,3/4\n") != std::string::npos);
}

TEST_CASE("extraction and recursion agree, and xi(n,i,j) = 0 iff n+i-j < 0") {
    OPSeq seq = compute_monic_ops(testgen::mu_one_spec(3, frac(1, 2)), 5);
    XiExtraction ex = extract_xi(seq, 5);
    CHECK(ex.report.all_pass());
    GITables gi = compute_GI(seq, seq.top());
    XiRecursion rec = xi_by_recursion(seq, gi, ex.xi, 5);
    CHECK(rec.xi == ex.xi);
    for (int n = 0; n <= 5; ++n)
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) CHECK((ex.xi.at(n, i, j) == 0) == (n + i - j < 0));
}

TEST_CASE("H bootstrap") {
    testgen::Gen g(53);
    WeightSpec w = testgen::random_spec(g, 3);
    OPSeq seq = compute_monic_ops(w, 3);
    MatQ X1 = X1_from_H0(seq.H[0], w.nu, w.a);
    CHECK(X1 == seq.X[1]);
    CHECK(H1_from_X1(X1, seq.H[0], w.A(), w.J()) == seq.H[1]);
    CHECK_FALSE(X1_from_H0(seq.H[0], w.nu, w.a, 1) == seq.X[1]);
    CHECK(H_recursion_step(nullptr, seq.H[0], seq.H[1], w.A(), w.J()) == seq.H[2]);
    for (int n = 1; n + 2 <= seq.top(); ++n)
        CHECK(H_recursion_step(&seq.H[n - 1], seq.H[n], seq.H[n + 1], w.A(), w.J()) == seq.H[n + 2]);
}
