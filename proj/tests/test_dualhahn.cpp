#include "mvop/dualhahn.hpp"

#include <doctest.h>

using namespace mvop;

TEST_CASE("delta family construction") {
    DHParams p = build_delta_family(2, frac(1, 2), Q(0), Q(1));
    CHECK(p.delta_nu == std::vector<Q>{Q(1), Q(1)});
    CHECK(check_delta_family(p).all_pass());
    DHParams q = build_delta_family(3, frac(1, 2), Q(2), Q(1));
    CHECK(q.delta_nu[0] == 1);
    CHECK(check_delta_family(q).all_pass());
    for (int k = 1; k <= 3; ++k) CHECK(q.delta_nu1[k - 1] == (k + 2) * q.delta_nu[k - 1]);

    CHECK_THROWS_AS(build_delta_family(2, frac(1, 2), Q(-1), Q(1)), std::invalid_argument);
    CHECK_THROWS_AS(build_delta_family(2, frac(1, 2), Q(0), Q(0)), std::invalid_argument);
    CHECK_THROWS_AS(build_delta_family(2, Q(0), Q(0), Q(1)), std::invalid_argument);

    DHParams bad = q;
    bad.delta_nu[2] *= 3;
    bad.delta_nu1[2] *= 3;
    Report r = check_delta_family(bad);
    CHECK(r.passed("condition_delta_Phi"));
    CHECK_FALSE(r.passed("recursion_alphas"));
}

TEST_CASE("epsilon sequence") {
    for (int n = 0; n <= 3; ++n)
        for (int i = 1; i <= 3; ++i) {
            auto e = epsilon_seq(n, i, Q(2), frac(1, 2));
            CHECK(e[0] == 1);
            CHECK(e[1] == Q(n + i) * 2);
            for (int j = 0; j < n + i; ++j) CHECK(e[j] / e[j + 1] * (n + i - j) * (frac(1, 2) * j + 2) == 1);
        }
    auto z = epsilon_seq(2, 1, Q(0), Q(1));
    CHECK(z[0] == 1);
    CHECK(z[1] == 0);
}

TEST_CASE("dual Hahn closed form over the grid") {
    for (int N : {2, 3})
        for (const Q& nu : {frac(1, 2), Q(1)})
            for (int c : {0, 1, 2}) {
                DHParams p = build_delta_family(N, nu, Q(c), Q(1));
                DualHahnRun run = dual_hahn_suite(p, 4);
                INFO("N=" << N << " nu=" << to_string(nu) << " c=" << c);
                CHECK(run.all_equal);
                CHECK(run.lemma71);
                CHECK(run.report.verified());
                CHECK(run.report.passed("xi_boundary_dh_corrected") == true);
                CHECK(run.report.passed("q_relation_corrected"));
                CHECK(run.report.passed("dual_hahn_3F2_vs_recurrence"));
                CHECK(run.extracted.at(0, 1, 1) == 1);
            }
}

TEST_CASE("closed form with a non-unit d") {
    DHParams p = build_delta_family(3, frac(3, 2), Q(1), frac(1, 2));
    DualHahnRun run = dual_hahn_suite(p, 3);
    CHECK(run.all_equal);
    CHECK(run.report.verified());
}

TEST_CASE("Phi and Psi") {
    DHParams p = build_delta_family(3, Q(1), Q(1), Q(1));
    PhiPsi pp = phi_psi(p);
    CHECK(pp.Phi.terms().begin()->first >= 0);
    CHECK(pp.Phi.terms().rbegin()->first == 2);
    CHECK(pp.Psi.terms().rbegin()->first == 1);
    Report r = verify_phi_psi(p);
    CHECK(r.passed("phi_star_conjugated"));
    CHECK(r.passed("psi_cor53"));
    CHECK(r.passed("negative_control_phi_degree"));
    CHECK(r.passed("negative_control_psi_degree"));
}

TEST_CASE("json shape") {
    DualHahnRun run = dual_hahn_suite(build_delta_family(2, frac(1, 2), Q(1), Q(1)), 2);
    json j = dual_hahn_to_json(run);
    for (const char* k : {"params", "delta_family", "xi_extracted", "xi_dual_hahn", "all_equal", "lemma71"})
        CHECK(j.contains(k));
    CHECK(j["all_equal"] == true);
}
