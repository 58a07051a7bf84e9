#pragma once

#include "mvop/matrix.hpp"

namespace mvop {

// W(x) = e^{xA} T(x) e^{xA^T},  T(x) = e^{-x} sum_k delta_k x^{nu+k} E_{k,k}.
struct WeightSpec {
    int N = 1;
    Q nu{1};
    std::vector<Q> a;      // N-1 entries, A_{k+1,k} = a_k
    std::vector<Q> delta;  // N entries
    RPoly phi = RPoly::x();

    void validate() const;  // throws std::invalid_argument
    MatQ A() const { return build_A(a, N); }
    MatQ J() const { return build_J(N); }
};

// m_s = (int_0^inf x^s W(x) dx) / Gamma(nu+1), s = 0..depth.
class MomentTable {
public:
    MomentTable() = default;
    MomentTable(const WeightSpec& spec, int depth);
    int depth() const { return static_cast<int>(m_.size()) - 1; }
    const MatQ& operator[](int s) const;
    const WeightSpec& spec() const { return spec_; }

private:
    WeightSpec spec_;
    std::vector<MatQ> m_;
};

// Closed form: sum_r delta_r c_{i,r} c_{j,r} (nu+1)_{s+i+j-r}, c_{i,r} = (A^{i-r})_{i,r}/(i-r)!.
MatQ moment(const WeightSpec& spec, int s);
// Second path: expand e^{xA} diag(delta_k x^k) e^{xA^T} and integrate x^{p+s} e^{-x} x^nu term by term.
MatQ moment_by_expansion(const WeightSpec& spec, int s);
// The Gamma(nu)-scaled closed form for H_0 with Pochhammer (nu)_{i+j-r+shift}, divided by Gamma(nu+1).
// shift = 1 agrees with the integral, shift = 0 is the alternative index.
MatQ h0_pochhammer_form(const WeightSpec& spec, int shift);

// <P,Q> = sum_{a,b} P_a m_{a+b} Q_b^T.
MatQ inner_product(const MatPoly& P, const MatPoly& Qp, const MomentTable& table);

}  // namespace mvop
