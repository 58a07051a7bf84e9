#include "mvop/report.hpp"

#include <doctest.h>

using namespace mvop;

TEST_CASE("ordering, residuals and displayed-form probes") {
    Report r;
    r.check("b", "loc", 2, true);
    r.check("a", "loc", 5, true);
    r.check("b", "loc", 1, true);
    MatQ bad = MatQ::identity(2);
    r.check_zero("c_claimed", "loc", 0, bad);
    auto s = r.sorted();
    CHECK(s[0].id == "a");
    CHECK(s[1].n == 1);
    CHECK(s[2].n == 2);
    CHECK_FALSE(r.all_pass());
    CHECK(r.verified());
    CHECK(r.failures() == 1);
    json j = r.to_json();
    CHECK(j[3]["displayed_form"] == true);
    CHECK(j[3]["residual"][0][0] == "1");
    r.check("d", "loc", -1, false);
    CHECK_FALSE(r.verified());
    CHECK(r.count("b") == 2);
    CHECK(r.passed("b"));
    CHECK_FALSE(r.passed("missing"));
}

TEST_CASE("rational serialisation") {
    CHECK(to_json(frac(-3, 6)) == "-1/2");
    CHECK(to_json(Q(4)) == "4");
}
