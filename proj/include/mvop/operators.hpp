#pragma once

#include "mvop/mvop.hpp"

namespace mvop {

// Differential operator sum_j d^j/dx^j F_j(x) acting on the right: Q.D = sum_j Q^{(j)} F_j.
class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(std::vector<MatPoly> F) : F_(std::move(F)) {}
    static DiffOp multiplication(const MatPoly& F0) { return DiffOp({F0}); }

    int order() const { return static_cast<int>(F_.size()) - 1; }
    const MatPoly& F(int j) const { return F_.at(static_cast<size_t>(j)); }
    MatPoly coeff(int j, int N) const { return j <= order() ? F_[j] : MatPoly(N); }

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator*=(const Q& s);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a += b * Q(-1); }
    friend DiffOp operator*(DiffOp a, const Q& s) { return a *= s; }

private:
    std::vector<MatPoly> F_;
};

MatPoly act_right(const MatPoly& Qp, const DiffOp& D);
// Q.[D1,D2] = (Q.D1).D2 - (Q.D2).D1.
MatPoly act_bracket(const MatPoly& Qp, const DiffOp& D1, const DiffOp& D2);

// e^{-x} x^nu body(x); derivatives stay in this form with a Laurent body.
struct ScaledMat {
    Q nu;
    MatLaurent body;

    ScaledMat derivative() const;
    friend ScaledMat operator*(const MatLaurent& l, const ScaledMat& w) { return {w.nu, l * w.body}; }
    friend ScaledMat operator*(const ScaledMat& w, const MatLaurent& r) { return {w.nu, w.body * r}; }
};

ScaledMat weight_T(const WeightSpec& spec);  // diagonal part
ScaledMat weight_W(const WeightSpec& spec);  // e^{xA} T e^{xA^T}

struct NamedOperators {
    DiffOp D, Ddag, Dsecond, C;  // calligraphic D, its adjoint, the second-order D, C = Ax - J
    DiffOp DQ;                   // e^{-xA} D e^{xA}
    SeqOp M, Mdag, Gamma, L, MC;
};
// Difference operators are tabulated on n = 0..seq.nmax.
NamedOperators make_named_operators(const OPSeq& seq);

// H_n (A^T - 1) H_{n-1}^{-1}, zero for n = 0.
MatQ HA(const OPSeq& seq, int n);
// H_n J H_n^{-1}.
MatQ HJ(const OPSeq& seq, int n);

// <P.D1, Q> = <P, Q.D2> for P = x^p I, Q = x^q I, p, q <= deg_bound. By left-linearity of the
// inner product in both slots this covers every matrix polynomial of that degree.
Report verify_adjoint_pair(const DiffOp& D1, const DiffOp& D2, const MomentTable& table, int deg_bound,
                           const std::string& id, const std::string& location);
Report verify_adjoint_pairs(const OPSeq& seq, int deg_bound);
Report verify_intertwinings(const OPSeq& seq);
Report verify_general_D_theorem(const OPSeq& seq);
// Conditions F2 W = W F2^T, 2(F2W)' - F1 W = W F1^T, (F2W)'' - (F1W)' + F0 W = W F0^T.
Report verify_symmetry_conditions(const DiffOp& D, const ScaledMat& W, const std::string& id,
                                  const std::string& location);
Report verify_symmetry_suite(const WeightSpec& spec);
Report verify_bracket_identities(const OPSeq& seq);
Report verify_seqop_algebra(const OPSeq& seq);

Report operator_suite(const OPSeq& seq);

}  // namespace mvop
