#pragma once

#include "mvop/laguerre.hpp"

namespace mvop {

// The mu = 1 family: a_k = -1, Delta^{(nu+1)} = (dJ + c) Delta^{(nu)}.
struct DHParams {
    int N = 2;
    Q nu{1, 2}, c{0}, d{1};
    Q alpha{1, 2};  // parameter of the Laguerre matrix L_mu^{(alpha)}
    std::vector<Q> mu, delta_nu, delta_nu1;

    Q gamma() const { return c / d; }
    WeightSpec weight() const;
};

// delta_nu_1 = 1, delta_nu_{k+1} = (dk+c) delta_nu_k / (dk(N-k)), delta_nu1_k = (dk+c) delta_nu_k.
// Throws std::invalid_argument unless d > 0, c >= 0, nu > 0.
DHParams build_delta_family(int N, const Q& nu, const Q& c, const Q& d);
// Both defining conditions and positivity, checked from the stored sequences.
Report check_delta_family(const DHParams& p);

// eps_0 .. eps_{n+i}.
std::vector<Q> epsilon_seq(int n, int i, const Q& c, const Q& d);

// q_j relations for every (n,i,j) with n+i-j > 0 in the table.
Report verify_q_recursions(const XiTable& xi, const DHParams& p);

// Closed forms for n+i-j > 0. `claimed` divides by eps_j and returns nullopt when that vanishes.
std::optional<Q> xi_dual_hahn_claimed(int n, int i, int j, const DHParams& p);
// xi(n,i,1) (-d)^{j-1} s_{j-1}(lambda*) / prod_{t<j} (n+i-t)(dt+c), lambda* = (N-i)(gamma+1+n).
Q xi_dual_hahn(int n, int i, int j, const Q& xi_n_i_1, const DHParams& p);

struct PhiPsi {
    MatLaurent Phi, Psi;
};
// Phi = W_nu^{-1} W_{nu+1}, Psi = W_nu^{-1} W_{nu+1}' from the factorisation L T L^T.
PhiPsi phi_psi(const DHParams& p);
Report verify_phi_psi(const DHParams& p);

// (R'(0,n) - R(0,n) A) C = D R(0,n).
Report verify_lemma71(const OPSeq& seq, const DHParams& p);

struct DualHahnRun {
    DHParams params;
    XiTable extracted;
    XiTable closed_form;  // corrected closed form where n+i-j > 0, extraction elsewhere
    bool all_equal = false;
    bool lemma71 = false;
    Report report;
};
DualHahnRun dual_hahn_suite(const DHParams& p, int nmax);
json dual_hahn_to_json(const DualHahnRun& run);

}  // namespace mvop
