#include "mvop/weight.hpp"

namespace mvop {

void WeightSpec::validate() const {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (nu <= 0) throw std::invalid_argument("nu must be > 0");
    if (static_cast<int>(a.size()) != N - 1)
        throw std::invalid_argument("a needs N-1 = " + std::to_string(N - 1) + " entries");
    if (static_cast<int>(delta.size()) != N)
        throw std::invalid_argument("delta needs N = " + std::to_string(N) + " entries");
    for (const auto& v : a)
        if (v == 0) throw std::invalid_argument("a_k must be nonzero");
    for (const auto& v : delta)
        if (v <= 0) throw std::invalid_argument("delta_k must be positive");
}

namespace {

void require_phi_x(const WeightSpec& spec) {
    if (!(spec.phi == RPoly::x())) throw std::domain_error("moments are only available for phi(x) = x");
}

// c_{i,r} with 1-based i >= r.
Q cfac(const WeightSpec& spec, int i, int r) {
    Q p(1);
    for (int k = r; k < i; ++k) p *= spec.a[static_cast<size_t>(k - 1)];
    return p / Q(factorial(i - r));
}

}  // namespace

MatQ moment(const WeightSpec& spec, int s) {
    require_phi_x(spec);
    MatQ m(spec.N);
    for (int i = 1; i <= spec.N; ++i)
        for (int j = 1; j <= i; ++j) {
            Q t(0);
            for (int r = 1; r <= j; ++r)
                t += spec.delta[static_cast<size_t>(r - 1)] * cfac(spec, i, r) * cfac(spec, j, r) *
                     pochhammer(spec.nu + 1, s + i + j - r);
            m(i - 1, j - 1) = t;
            m(j - 1, i - 1) = t;
        }
    return m;
}

MatQ moment_by_expansion(const WeightSpec& spec, int s) {
    require_phi_x(spec);
    const int N = spec.N;
    std::vector<MatQ> tc(static_cast<size_t>(N + 1), MatQ(N));
    for (int k = 1; k <= N; ++k) tc[static_cast<size_t>(k)](k - 1, k - 1) = spec.delta[static_cast<size_t>(k - 1)];
    MatQ A = spec.A();
    const MatPoly e = exp_nilpotent(A, 1);
    MatPoly body = e * MatPoly(tc) * e.transpose();
    MatQ m(N);
    for (int p = 0; p <= body.degree(); ++p) m += body.coeff(p) * pochhammer(spec.nu + 1, p + s);
    return m;
}

MatQ h0_pochhammer_form(const WeightSpec& spec, int shift) {
    MatQ m(spec.N);
    for (int i = 1; i <= spec.N; ++i)
        for (int j = 1; j <= spec.N; ++j) {
            Q t(0);
            for (int r = 1; r <= std::min(i, j); ++r)
                t += spec.delta[static_cast<size_t>(r - 1)] * cfac(spec, i, r) * cfac(spec, j, r) *
                     pochhammer(spec.nu, i + j - r + shift);
            // Gamma(nu) / Gamma(nu+1) = 1/nu
            m(i - 1, j - 1) = t / spec.nu;
        }
    return m;
}

MomentTable::MomentTable(const WeightSpec& spec, int depth) : spec_(spec) {
    spec.validate();
    m_.reserve(static_cast<size_t>(depth + 1));
    for (int s = 0; s <= depth; ++s) m_.push_back(moment(spec, s));
}

const MatQ& MomentTable::operator[](int s) const {
    if (s < 0 || s > depth())
        throw std::out_of_range("moment table depth " + std::to_string(depth()) + " < " + std::to_string(s));
    return m_[static_cast<size_t>(s)];
}

MatQ inner_product(const MatPoly& P, const MatPoly& Qp, const MomentTable& table) {
    const int n = table.spec().N;
    MatQ r(n);
    if (P.degree() + Qp.degree() > table.depth())
        throw std::out_of_range("inner_product: moment table too shallow");
    for (int a = 0; a <= P.degree(); ++a) {
        const MatQ& pa = P.coeffs()[static_cast<size_t>(a)];
        if (pa.is_zero()) continue;
        for (int b = 0; b <= Qp.degree(); ++b) {
            const MatQ& qb = Qp.coeffs()[static_cast<size_t>(b)];
            if (qb.is_zero()) continue;
            r += pa * table[a + b] * qb.transpose();
        }
    }
    return r;
}

}  // namespace mvop
