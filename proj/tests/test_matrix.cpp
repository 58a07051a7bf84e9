#include "gen.hpp"

#include "mvop/matrix.hpp"

#include <doctest.h>

using namespace mvop;

TEST_CASE("inverse and determinant") {
    testgen::Gen g(3);
    for (int t = 0; t < 30; ++t) {
        const int n = static_cast<int>(g.integer(1, 4));
        MatQ a = g.matrix(n), b = g.matrix(n);
        CHECK((a * b).determinant() == a.determinant() * b.determinant());
        if (a.determinant() != 0) {
            CHECK(a * a.inverse() == MatQ::identity(n));
        } else {
            CHECK_THROWS_AS(a.inverse(), std::domain_error);
        }
        MatQ L = g.unit_lower(n);
        CHECK(unipotent_inverse(L) == L.inverse());
    }
    MatQ s(2);
    s(0, 0) = 1;
    s(0, 1) = 2;
    s(1, 0) = 2;
    s(1, 1) = 4;
    CHECK_THROWS_AS(s.inverse(), std::domain_error);
}

TEST_CASE("nilpotent exponential") {
    testgen::Gen g(5);
    for (int N = 1; N <= 4; ++N) {
        std::vector<Q> a;
        for (int k = 0; k + 1 < N; ++k) a.push_back(g.rational());
        MatQ A = build_A(a, N);
        MatPoly e = exp_nilpotent(A, 1), em = exp_nilpotent(A, -1);
        CHECK(e * em == MatPoly::constant(MatQ::identity(N)));
        CHECK(e.derivative() == e * A);
        CHECK(e.degree() <= N - 1);
    }
}

TEST_CASE("K_n conjugates Lambda_n to Gamma_n") {
    testgen::Gen g(9);
    for (int N = 1; N <= 4; ++N)
        for (long n = 0; n <= 4; ++n) {
            std::vector<Q> a;
            for (int k = 0; k + 1 < N; ++k) a.push_back(g.rational());
            const Q nu = g.positive();
            MatQ K = build_K(n, nu, a, N);
            CHECK(K.is_lower_triangular());
            CHECK(K * lambda_matrix(n, N) * K.inverse() == gamma_matrix(n, nu, build_A(a, N)));
        }
}

TEST_CASE("matrix polynomials and Laurent series") {
    testgen::Gen g(13);
    const int N = 3;
    MatPoly p(std::vector<MatQ>{g.matrix(N), g.matrix(N), g.matrix(N)});
    MatPoly q(std::vector<MatQ>{g.matrix(N), g.matrix(N)});
    Q x = g.rational();
    CHECK((p * q)(x) == p(x) * q(x));
    CHECK((p * q).transpose() == q.transpose() * p.transpose());
    MatLaurent lp(p), lq(q);
    CHECK(lp * lq == MatLaurent(p * q));
    MatLaurent inv = MatLaurent::monomial(MatQ::identity(N), -2);
    CHECK((lp * inv).shift(2) == lp);
    CHECK((lp * inv).derivative().coeff(-3) == p.coeff(0) * Q(-2));
}
