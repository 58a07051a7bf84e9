#include "mvop/mvop.hpp"

#include <stdexcept>

namespace mvop {

OPSeq compute_monic_ops(const WeightSpec& spec, int nmax, const OrthoOptions& opt) {
    spec.validate();
    if (nmax < 0) throw std::invalid_argument("nmax must be nonnegative");
    const int N = spec.N, top = nmax + 1;
    OPSeq s;
    s.spec = spec;
    s.spec.nu.canonicalize();
    for (auto& v : s.spec.a) v.canonicalize();
    for (auto& v : s.spec.delta) v.canonicalize();
    s.nmax = nmax;
    s.moments = MomentTable(s.spec, 2 * top + opt.extra_depth);
    const MatQ I = MatQ::identity(N);

    for (int n = 0; n <= top; ++n) {
        MatPoly xn = MatPoly::monomial(I, n);
        MatPoly p = xn;
        for (int k = 0; k < n; ++k) {
            int m = opt.reverse_order ? n - 1 - k : k;
            p -= (inner_product(xn, s.P[m], s.moments) * s.Hinv[m]) * s.P[m];
        }
        MatQ h = inner_product(p, p, s.moments);
        s.Hinv.push_back(h.inverse());
        s.H.push_back(std::move(h));
        s.X.push_back(n >= 1 ? p.coeff(n - 1) : MatQ(N));
        s.Y.push_back(n >= 2 ? p.coeff(n - 2) : MatQ(N));
        s.P.push_back(std::move(p));
    }
    for (int n = 0; n <= nmax; ++n) s.B.push_back(s.X[n] - s.X[n + 1]);
    s.C.push_back(MatQ(N));
    for (int n = 1; n <= top; ++n) s.C.push_back(s.H[n] * s.Hinv[n - 1]);
    return s;
}

Report verify_orthogonality(const OPSeq& seq, int upto) {
    Report r;
    upto = std::min(upto, seq.top());
    for (int n = 0; n <= upto; ++n) {
        for (int m = 0; m <= upto; ++m) {
            MatQ ip = inner_product(seq.P[n], seq.P[m], seq.moments);
            r.check_zero("orthogonality", "equation Hn", n, n == m ? ip - seq.H[n] : ip,
                         "m=" + std::to_string(m));
        }
        bool pd = true;
        for (const Q& d : seq.H[n].leading_minors()) pd = pd && d > 0;
        r.check("H_positive_definite", "equation Hn", n, pd && static_cast<int>(seq.H[n].leading_minors().size()) == seq.N());
        r.check("H_symmetric", "equation Hn", n, seq.H[n].is_symmetric());
        r.check("P_monic", "equation Hn", n, seq.P[n].degree() == n && seq.P[n].coeff(n) == MatQ::identity(seq.N()));
    }
    return r;
}

Report verify_three_term(const OPSeq& seq) {
    Report r;
    const int N = seq.N();
    for (int n = 0; n <= seq.nmax; ++n) {
        MatPoly lhs = seq.P[n].shift_up();
        MatPoly rhs = seq.P[n + 1] + seq.B[n] * seq.P[n];
        if (n >= 1) rhs += seq.C[n] * seq.P[n - 1];
        MatPoly d = lhs - rhs;
        MatQ worst(N);
        for (int k = 0; k <= d.degree(); ++k)
            if (!d.coeff(k).is_zero()) { worst = d.coeff(k); break; }
        r.check_zero("three_term", "eq:three_term_monic", n, worst);
        r.check_equal("C_from_H", "B C", n, seq.C[n], n ? seq.H[n] * seq.Hinv[n - 1] : MatQ(N));
    }
    for (int n = 1; n <= seq.nmax; ++n)
        r.check_equal("Y_recursion", "prop Y", n, seq.Y[n], seq.Y[n + 1] + seq.B[n] * seq.X[n] + seq.C[n]);
    return r;
}

SeqOp jacobi_operator(const OPSeq& seq) {
    const int N = seq.N(), hi = seq.nmax;
    SeqOp L = SeqOp::shift(N, hi, 1);
    SeqOp bc(N, hi);
    bc.set_all(0, seq.B);
    bc.set_all(-1, seq.C);
    return L + bc;
}

SeqOp apply_L_poly(const RPoly& v, const OPSeq& seq) {
    const int N = seq.N();
    SeqOp L = jacobi_operator(seq);
    SeqOp power = SeqOp::identity(N, seq.nmax);
    SeqOp out = power * Q(0);
    for (long k = 0; k <= v.degree(); ++k) {
        if (k > 0) power = L * power;
        out += power * v.coeff(k);
    }
    if (v.is_zero()) return SeqOp(N, seq.nmax);
    return out;
}

ScalarLaguerre scalar_monic_laguerre(const Q& alpha, int nmax) {
    ScalarLaguerre s;
    for (int n = 0; n <= nmax + 1; ++n) {
        s.b.push_back(Q(2 * n + 1) + alpha);
        s.c.push_back(Q(n) * (Q(n) + alpha));
    }
    s.p.push_back(RPoly::constant(Q(1)));
    s.p.push_back(RPoly(std::vector<Q>{Q(-s.b[0]), Q(1)}));
    for (int n = 1; n <= nmax; ++n)
        s.p.push_back(RPoly::x() * s.p[n] - s.b[n] * s.p[n] - s.c[n] * s.p[n - 1]);
    for (const auto& p : s.p) s.x1.push_back(p.degree() >= 1 ? p.coeff(p.degree() - 1) : Q(0));
    return s;
}

Report verify_scalar_reduction(const OPSeq& seq) {
    Report r;
    if (seq.N() != 1) return r;
    const Q nu = seq.spec.nu;
    ScalarLaguerre ref = scalar_monic_laguerre(nu + 1, seq.nmax);
    r.check_equal("scalar_X1", "B C", 1, seq.X[1], MatQ::identity(1, -(nu + 2)));
    for (int n = 0; n <= seq.nmax; ++n) {
        r.check_equal("scalar_B", "B C", n, seq.B[n], MatQ::identity(1, ref.b[n]));
        r.check_equal("scalar_C", "B C", n, seq.C[n], MatQ::identity(1, Q(n) * (Q(n) + nu + 1)));
        r.check_equal("scalar_C_recurrence", "B C", n, seq.C[n], MatQ::identity(1, ref.c[n]));
        bool same = true;
        for (int k = 0; k <= n; ++k) same = same && seq.P[n].coeff(k)(0, 0) == ref.p[n].coeff(k);
        r.check("scalar_P", "equation Hn", n, same);
    }
    return r;
}

}  // namespace mvop
