#pragma once

#include "mvop/report.hpp"
#include "mvop/seqop.hpp"
#include "mvop/weight.hpp"

namespace mvop {

// Monic MVOPs and recurrence data. P, H, X, Y are stored for n = 0..top with top = nmax+1,
// so B_n = X_n - X_{n+1} is available for n = 0..nmax.
struct OPSeq {
    WeightSpec spec;
    MomentTable moments;
    int nmax = 0;
    std::vector<MatPoly> P;
    std::vector<MatQ> H, Hinv;
    std::vector<MatQ> X, Y;  // coefficients of x^{n-1}, x^{n-2} in P_n
    std::vector<MatQ> B;     // n = 0..nmax
    std::vector<MatQ> C;     // n = 0..top, C_0 = 0

    int top() const { return static_cast<int>(P.size()) - 1; }
    int N() const { return spec.N; }
};

struct OrthoOptions {
    bool reverse_order = false;  // subtract projections from the highest m down
    int extra_depth = 0;         // moments beyond the default 2*nmax+2
};

// Gram-Schmidt on matrix monomials: P_n = x^n - sum_{m<n} <x^n, P_m> H_m^{-1} P_m.
OPSeq compute_monic_ops(const WeightSpec& spec, int nmax, const OrthoOptions& opt = {});

// <P_n, P_m> = delta_{nm} H_n, plus leading minors of H_n.
Report verify_orthogonality(const OPSeq& seq, int upto);
// xP_n = P_{n+1} + B_n P_n + C_n P_{n-1};  Y_n = Y_{n+1} + B_n X_n + C_n.
Report verify_three_term(const OPSeq& seq);

// The Jacobi operator L = delta + B_n + C_n delta^{-1} on the window 0..nmax.
SeqOp jacobi_operator(const OPSeq& seq);
// v(L) built by composition. The window shrinks by deg v.
SeqOp apply_L_poly(const RPoly& v, const OPSeq& seq);

// Classical monic Laguerre data for alpha = nu + 1 (the N = 1 case), from the scalar recurrence.
struct ScalarLaguerre {
    std::vector<RPoly> p;  // monic
    std::vector<Q> b, c, x1;
};
ScalarLaguerre scalar_monic_laguerre(const Q& alpha, int nmax);

// N = 1 reduction checks: X_1 = -(nu+2), B_n, C_n = n(n+nu+1), P_n against the scalar recurrence.
Report verify_scalar_reduction(const OPSeq& seq);

}  // namespace mvop
