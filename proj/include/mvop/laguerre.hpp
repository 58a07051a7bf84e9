#pragma once

#include "mvop/operators.hpp"

#include <string>
#include <vector>

namespace mvop {

// xi(n,i,j) for 0 <= n <= nmax, 1 <= i,j <= N.
class XiTable {
public:
    XiTable() = default;
    XiTable(int N, int nmax) : N_(N), nmax_(nmax), v_(static_cast<size_t>(nmax + 1) * N * N, Q(0)) {}
    int N() const { return N_; }
    int nmax() const { return nmax_; }
    Q& at(int n, int i, int j) { return v_[idx(n, i, j)]; }
    const Q& at(int n, int i, int j) const { return v_[idx(n, i, j)]; }
    // Zero outside the stored window, as with the n+i-j < 0 convention.
    Q get(int n, int i, int j) const;
    bool operator==(const XiTable& o) const { return N_ == o.N_ && nmax_ == o.nmax_ && v_ == o.v_; }

private:
    size_t idx(int n, int i, int j) const;
    int N_ = 0, nmax_ = -1;
    std::vector<Q> v_;
};

// G(n) = K_n^{-1} H_n (A^T-1) H_{n-1}^{-1} K_{n-1} for n >= 1 (G[0] is zero), I(n) = K_n^{-1} H_n J H_n^{-1} K_n.
struct GITables {
    std::vector<MatQ> G, I;
    int upto() const { return static_cast<int>(I.size()) - 1; }
};

MatQ K_matrix(const OPSeq& seq, long n);

// e^{xA} and R(x,n) = K_n^{-1} P_n e^{xA}.
MatPoly compute_Q(const OPSeq& seq, int n);
MatPoly compute_R(const OPSeq& seq, int n);
// x d^2 + d(1+nu-x+J) - J.
DiffOp diagonal_operator_DQ(const WeightSpec& spec);

struct XiExtraction {
    XiTable xi;
    Report report;  // proportionality and zero-pattern checks
};
// Requires R(x,n)_{i,j} = xi * L^{(nu+j)}_{n+i-j}(x) as polynomials, not only at x = 0.
XiExtraction extract_xi(const OPSeq& seq, int nmax);

GITables compute_GI(const OPSeq& seq, int upto);
Report verify_GI(const OPSeq& seq, const GITables& gi);

struct XiRecursion {
    XiTable xi;
    std::vector<bool> fallback;        // per entry, same layout as the table: taken from extraction
    std::vector<std::string> events;   // vanishing coefficients, one line each
    Report report;                     // displayed-form comparisons
};
// Fills the table from the seeds, the boundary family xi(., ., n+i) and the interior recursion.
// `extracted` supplies fallback values where a recursion coefficient vanishes.
XiRecursion xi_by_recursion(const OPSeq& seq, const GITables& gi, const XiTable& extracted, int nmax);

// One step of the three-term recursion for H. Hprev = H_{n-1} may be null (n = 0).
MatQ H_recursion_step(const MatQ* Hprev, const MatQ& Hn, const MatQ& Hn1, const MatQ& A, const MatQ& J);

// X(1) from H_0 through its zero pattern, superdiagonal seed and the entrywise recursions.
// seed_sign multiplies (H_0 J H_0^{-1})_{i,i+1}; +1 is the displayed seed, -1 the one that holds.
MatQ X1_from_H0(const MatQ& H0, const Q& nu, const std::vector<Q>& a, int seed_sign = -1);
MatQ H1_from_X1(const MatQ& X1, const MatQ& H0, const MatQ& A, const MatQ& J);

Report verify_R(const OPSeq& seq);
Report verify_K(const OPSeq& seq);
Report verify_Q_relation(const OPSeq& seq);
Report verify_X_recursion(const OPSeq& seq, const GITables& gi);
Report verify_H_recursions(const OPSeq& seq);
Report verify_xi_tables(const OPSeq& seq);

Report laguerre_suite(const OPSeq& seq);

json xi_to_json(const XiTable& xi, const std::vector<std::string>& provenance);
std::string xi_to_csv(const XiTable& xi);

}  // namespace mvop
