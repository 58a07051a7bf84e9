#include "mvop/dualhahn.hpp"

#include <stdexcept>

namespace mvop {

namespace {

MatQ diag_of(const std::vector<Q>& v) { return MatQ::diag(v); }

// L(0)_{m,k} = L^{(alpha+k)}_{m-k}(0), unit lower triangular (mu = 1).
MatQ laguerre_matrix0(const Q& alpha, int N) {
    MatQ L(N);
    for (int m = 1; m <= N; ++m)
        for (int k = 1; k <= m; ++k) L(m - 1, k - 1) = laguerre_poly(alpha + k, m - k)(Q(0));
    return L;
}

// diag(x^{k} s_k) as a Laurent series; `sign` = -1 gives x^{-k}.
MatLaurent power_diag(const std::vector<Q>& s, int sign) {
    const int N = static_cast<int>(s.size());
    MatLaurent out(N);
    for (int k = 1; k <= N; ++k) {
        MatQ m(N);
        m(k - 1, k - 1) = s[k - 1];
        out += MatLaurent::monomial(m, sign * k);
    }
    return out;
}

int max_power(const MatLaurent& m) { return m.is_zero() ? -1 : m.terms().rbegin()->first; }
int min_power(const MatLaurent& m) { return m.is_zero() ? 0 : m.terms().begin()->first; }

// Phi and Psi for arbitrary level-nu / level-(nu+1) diagonals.
PhiPsi phi_psi_from(int N, const Q& nu, const Q& alpha, const MatQ& A, const std::vector<Q>& dnu,
                    const std::vector<Q>& dnu1) {
    const MatQ L0 = laguerre_matrix0(alpha, N);
    const MatLaurent L(MatPoly::constant(L0) * exp_nilpotent(A, 1));
    const MatLaurent Linv(exp_nilpotent(A, -1) * MatPoly::constant(unipotent_inverse(L0)));
    const MatLaurent Lt = L.transpose(), Ltinv = Linv.transpose();
    std::vector<Q> inv(dnu.size());
    for (size_t k = 0; k < dnu.size(); ++k) inv[k] = 1 / dnu[k];
    const MatLaurent Sinv = power_diag(inv, -1);
    const MatLaurent M = L * power_diag(dnu1, 1) * Lt;  // W_{nu+1} / (e^{-x} x^{nu+1})
    const MatLaurent front = Ltinv * Sinv * Linv;        // W_nu^{-1} e^{-x} x^{nu}
    PhiPsi out;
    out.Phi = (front * M).shift(1);
    MatQ I = MatQ::identity(N);
    MatLaurent bracket = M * MatLaurent::monomial(I * (nu + 1), 0) - M.shift(1) + M.derivative().shift(1);
    out.Psi = front * bracket;
    return out;
}

Q pochhammer_neg(long M, long k) { return pochhammer(Q(-M), k); }

std::string ijn(int i, int j) { return "i=" + std::to_string(i) + " j=" + std::to_string(j); }

}  // namespace

WeightSpec DHParams::weight() const {
    WeightSpec w;
    w.N = N;
    w.nu = nu;
    w.a.assign(N > 0 ? N - 1 : 0, Q(-1));
    w.delta = delta_nu;
    return w;
}

DHParams build_delta_family(int N, const Q& nu, const Q& c, const Q& d) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (nu <= 0) throw std::invalid_argument("nu must be > 0");
    if (d <= 0) throw std::invalid_argument("d must be > 0");
    if (c < 0) throw std::invalid_argument("c must be >= 0");
    DHParams p;
    p.N = N;
    p.nu = nu;
    p.alpha = nu;
    p.c = c;
    p.d = d;
    p.mu.assign(N, Q(1));
    p.delta_nu.assign(N, Q(1));
    for (int k = 1; k < N; ++k) p.delta_nu[k] = (d * k + c) * p.delta_nu[k - 1] / (d * k * (N - k));
    p.delta_nu1.resize(N);
    for (int k = 1; k <= N; ++k) p.delta_nu1[k - 1] = (d * k + c) * p.delta_nu[k - 1];
    for (const Q& v : p.delta_nu)
        if (v <= 0) throw std::invalid_argument("nonpositive delta");
    Report r = check_delta_family(p);
    if (!r.all_pass()) throw std::invalid_argument("delta family violates its defining conditions");
    return p;
}

Report check_delta_family(const DHParams& p) {
    Report r;
    const int N = p.N;
    bool sizes = static_cast<int>(p.delta_nu.size()) == N && static_cast<int>(p.delta_nu1.size()) == N &&
                 static_cast<int>(p.mu.size()) == N;
    r.check("delta_sizes", "eq:condition_delta_Phi", -1, sizes);
    if (!sizes) return r;
    bool pos = true, phi = true, alphas = true;
    for (int k = 1; k <= N; ++k) {
        pos = pos && p.delta_nu[k - 1] > 0 && p.delta_nu1[k - 1] > 0 && p.mu[k - 1] != 0;
        phi = phi && p.delta_nu1[k - 1] == (p.d * k + p.c) * p.delta_nu[k - 1];
    }
    for (int k = 1; k < N && pos; ++k) {
        Q lhs = p.mu[k] * p.mu[k] / (p.mu[k - 1] * p.mu[k - 1]);
        alphas = alphas && lhs == p.d * k * (N - k) * p.delta_nu[k] / p.delta_nu1[k - 1];
    }
    r.check("delta_positive", "eq:condition_delta_Phi", -1, pos);
    r.check("condition_delta_Phi", "eq:condition_delta_Phi", -1, phi);
    r.check("recursion_alphas", "eq:recursion-alphas", -1, alphas);
    return r;
}

std::vector<Q> epsilon_seq(int n, int i, const Q& c, const Q& d) {
    std::vector<Q> e{Q(1)};
    for (int j = 1; j <= n + i; ++j) e.push_back(Q((n + i - j + 1) * (d * (j - 1) + c) * e.back()));
    return e;
}

Report verify_q_recursions(const XiTable& xi, const DHParams& p) {
    Report r;
    const int N = p.N;
    const Q g = p.gamma();
    for (int n = 0; n <= xi.nmax(); ++n)
        for (int i = 1; i <= N; ++i) {
            const auto eps = epsilon_seq(n, i, p.c, p.d);
            auto q = [&](int j) -> Q {
                if (j < 1 || j > N || j > n + i) return Q(0);
                return eps[j] * xi.at(n, i, j);
            };
            auto qt = [&](int j) -> Q {
                Q dj = 1;
                for (int t = 0; t < j; ++t) dj *= p.d;
                return q(j) / dj;
            };
            for (int j = 1; j <= N && n + i - j > 0; ++j) {
                const Q mu_ratio = j >= 2 ? Q(p.mu[j - 2] / p.mu[j - 1]) : Q(0);
                const Q E = (n + i - j) * (j + g) + (j - 1) * (N - j + 1) + n * ((i - N - 1) - g);
                const Q F = (j - 1) * (N - j + 1) * mu_ratio * (n + i - j + 1) * (p.d * (j - 1) + p.c);
                const Q Ft = (j - 1) * (N - j + 1) * (n + i - j + 1) * (j - 1 + g);
                const Q claimed = E * q(j) + F * q(j - 1) + q(j + 1) / p.d;
                const Q fixed = q(j + 1) / p.d - E * q(j) + F * q(j - 1);
                const Q claimed_t = E * qt(j) + Ft * qt(j - 1) + qt(j + 1);
                const Q fixed_t = qt(j + 1) - E * qt(j) + Ft * qt(j - 1);
                // the rescaling q~_j = d^{-j} q_j turns one relation into the other
                const Q scaled = fixed * p.d;
                Q dj = 1;
                for (int t = 0; t < j; ++t) dj *= p.d;
                r.check("q_relation_claimed", "lema qj", n, claimed == 0, ijn(i, j));
                r.check("q_relation_corrected", "lema qj", n, fixed == 0, ijn(i, j) + "; sign of E_j flipped");
                r.check("qtilde_relation_claimed", "lema qtilde", n, claimed_t == 0, ijn(i, j));
                r.check("qtilde_relation_corrected", "lema qtilde", n, fixed_t == 0,
                        ijn(i, j) + "; sign of E_j flipped");
                r.check("qtilde_is_rescaled_q", "definition qtj", n, fixed_t * dj == scaled, ijn(i, j));
            }
        }
    return r;
}

std::optional<Q> xi_dual_hahn_claimed(int n, int i, int j, const DHParams& p) {
    const auto eps = epsilon_seq(n, i, p.c, p.d);
    if (j < 1 || j >= static_cast<int>(eps.size()) || eps[j] == 0) return std::nullopt;
    const long M = p.N - 1;
    const Q g = p.gamma();
    const Q delta = n + i - p.N;
    const Q x = (g + 1) * (p.N + i - 2) - n * (p.N - i);
    Q T;
    try {
        T = dual_hahn(j - 1, x, g, delta, M);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    Q dj = 1;
    for (int t = 0; t < j; ++t) dj *= p.d;
    return Q(dj * pochhammer(g + 1, j - 1) * pochhammer_neg(M, j - 1) / eps[j] * T);
}

Q xi_dual_hahn(int n, int i, int j, const Q& xi_n_i_1, const DHParams& p) {
    const long M = p.N - 1;
    const Q g = p.gamma();
    const Q delta = n + i - p.N;
    const Q lambda = (p.N - i) * (g + 1 + n);
    const auto s = dual_hahn_s(j - 1, lambda, g, delta, M);
    Q v = xi_n_i_1 * s[j - 1];
    for (int t = 1; t < j; ++t) v *= -p.d / ((n + i - t) * (p.d * t + p.c));
    return v;
}

PhiPsi phi_psi(const DHParams& p) {
    return phi_psi_from(p.N, p.nu, p.alpha, p.weight().A(), p.delta_nu, p.delta_nu1);
}

Report verify_phi_psi(const DHParams& p) {
    Report r;
    const int N = p.N;
    const MatQ A = p.weight().A(), J = p.weight().J(), I = MatQ::identity(N);
    const PhiPsi pp = phi_psi(p);
    r.check("phi_polynomial", "def Phi Psi", -1, min_power(pp.Phi) >= 0);
    r.check("psi_polynomial", "def Phi Psi", -1, min_power(pp.Psi) >= 0);
    const int want_phi = N >= 2 ? 2 : 1;
    r.check("phi_degree", "def Phi Psi", -1, max_power(pp.Phi) == want_phi,
            "deg " + std::to_string(max_power(pp.Phi)));
    r.check("psi_degree", "def Phi Psi", -1, max_power(pp.Psi) == 1, "deg " + std::to_string(max_power(pp.Psi)));

    const MatQ L0 = laguerre_matrix0(p.alpha, N), L0inv = unipotent_inverse(L0);
    const MatLaurent L0t = MatLaurent::monomial(L0.transpose(), 0);
    const MatLaurent L0tinv = MatLaurent::monomial(L0inv.transpose(), 0);
    const MatQ dJc = J * p.d + p.c;
    const MatQ DAD = diag_of(p.delta_nu).inverse() * A * diag_of(p.delta_nu1);
    auto mono = [](const MatQ& m, int k) { return MatLaurent::monomial(m, k); };

    // Corollary 5.3 forms.
    MatLaurent phi_c = mono(-A.transpose() * p.d, 2) + mono(dJc, 1);
    MatLaurent psi_c = mono((J - A.transpose() * (J + (p.nu + 1)) - Q(N + 1)) * p.d - p.c, 1) +
                       mono((J + (p.nu + 1)) * dJc + DAD, 0);
    r.check("phi_cor53", "Cor 5.3", -1, L0t * pp.Phi * L0tinv == phi_c);
    r.check("psi_cor53", "Cor 5.3", -1, L0t * pp.Psi * L0tinv == psi_c);

    // e^{-xA} L(0)^{-1} X^* L(0) e^{xA}
    const MatLaurent em(exp_nilpotent(A, -1)), ep(exp_nilpotent(A, 1));
    auto conj = [&](const MatLaurent& X) {
        return em * mono(L0inv, 0) * X.transpose() * mono(L0, 0) * ep;
    };
    r.check("phi_star_conjugated", "Appendix", -1, conj(pp.Phi) == mono(dJc, 1));
    const MatLaurent xA = mono(A, 1), Jl = mono(J, 0);
    MatLaurent inner = (xA + Jl - (xA + Jl + mono(I * (p.nu + 1), 0)) * mono(A, 0) - mono(I * Q(N + 1), 0)) * p.d -
                       mono(I * p.c, 0);
    MatLaurent psi_star = inner.shift(1) + ((xA + Jl) * p.d + mono(I * p.c, 0)) * (xA + Jl + mono(I * (p.nu + 1), 0)) +
                          em * mono(DAD.transpose(), 0) * ep;
    r.check("psi_star_conjugated", "Appendix", -1, conj(pp.Psi) == psi_star);

    if (N >= 3) {
        // level nu+1 not of the form (dJ+c) Delta^{(nu)}
        std::vector<Q> bad1 = p.delta_nu1;
        bad1[0] += 1;
        PhiPsi nc = phi_psi_from(N, p.nu, p.alpha, A, p.delta_nu, bad1);
        r.check("negative_control_phi_degree", "eq:condition_delta_Phi", -1, max_power(nc.Phi) > 2,
                "deg " + std::to_string(max_power(nc.Phi)));
        r.check("negative_control_phi_laurent_claimed", "eq:condition_delta_Phi", -1, min_power(nc.Phi) < 0,
                "Phi stays polynomial: W_nu^{-1} W_{nu+1} = x L^{-T} diag(r) L^T for any diagonal ratio r");
        // condition_delta_Phi kept, recursion-alphas broken
        std::vector<Q> bad = p.delta_nu;
        bad[1] *= 2;
        std::vector<Q> bad_1(N);
        for (int k = 1; k <= N; ++k) bad_1[k - 1] = (p.d * k + p.c) * bad[k - 1];
        PhiPsi nc2 = phi_psi_from(N, p.nu, p.alpha, A, bad, bad_1);
        r.check("negative_control_psi_degree", "eq:recursion-alphas", -1, max_power(nc2.Psi) > 1,
                "deg " + std::to_string(max_power(nc2.Psi)));
    }
    return r;
}

Report verify_lemma71(const OPSeq& seq, const DHParams& p) {
    Report r;
    const int N = p.N;
    const MatQ A = seq.spec.A(), J = seq.spec.J();
    const MatQ DAD = diag_of(p.delta_nu).inverse() * A * diag_of(p.delta_nu1);
    const MatQ C = (J * p.d + p.c) * (J + (p.nu + 1)) + DAD.transpose();
    MatQ Cclaimed = C;
    bool entry = true;
    for (int j = 2; j <= N; ++j) {
        const Q want = p.d * (j - 1) * (N - j + 1) * p.mu[j - 2] / p.mu[j - 1];
        entry = entry && DAD.transpose()(j - 2, j - 1) == want;
        Cclaimed(j - 2, j - 1) = want;
    }
    r.check("lemma71_C_entry_claimed", "Appendix", -1, entry,
            "actual entry is -d(j-1)(N-j+1) mu_{j-1}/mu_j");
    for (int n = 0; n <= seq.nmax; ++n) {
        const MatPoly R = compute_R(seq, n);
        const MatQ R0 = R(Q(0)), R1 = R.derivative()(Q(0));
        const MatQ D = ((J - Q(N + 1)) * p.d - p.c) * Q(n);
        r.check_zero("lemma71", "equation ev 0", n, (R1 - R0 * A) * C - D * R0);
        if (N >= 2 && n >= 1)
            r.check("negative_control_lemma71", "equation ev 0", n, !((R1 - R0 * A) * Cclaimed - D * R0).is_zero(),
                    "C with the displayed superdiagonal");
    }
    return r;
}

DualHahnRun dual_hahn_suite(const DHParams& p, int nmax) {
    DualHahnRun run;
    run.params = p;
    Report& r = run.report;
    r.merge(check_delta_family(p));
    const int N = p.N;

    // spec example: a hand-set level-nu sequence breaking recursion-alphas is rejected
    if (N >= 2) {
        DHParams bad = p;
        bad.delta_nu[1] += 1;
        for (int k = 1; k <= N; ++k) bad.delta_nu1[k - 1] = (p.d * k + p.c) * bad.delta_nu[k - 1];
        r.check("negative_control_delta_family", "eq:recursion-alphas", -1, !check_delta_family(bad).all_pass());
    }

    for (int n = 0; n <= nmax; ++n)
        for (int i = 1; i <= N; ++i) {
            const auto eps = epsilon_seq(n, i, p.c, p.d);
            bool lemma = eps[0] == 1, mult = true;
            for (int j = 0; j < n + i; ++j) {
                const Q Mj = (n + i - j) * (p.d * j + p.c);
                mult = mult && eps[j + 1] == Mj * eps[j];
                lemma = lemma && eps[j + 1] != 0 && eps[j] / eps[j + 1] * Mj == 1;
            }
            r.check("epsilon_lemma_claimed", "lema epsilon's", n, lemma,
                    lemma ? ijn(i, 0) : ijn(i, 0) + "; eps_j = 0 for j >= 1 when c = 0, ratio undefined");
            r.check("epsilon_recursion_multiplicative", "epsilon recursion", n, mult, ijn(i, 0));
        }

    const OPSeq seq = compute_monic_ops(p.weight(), nmax);
    XiExtraction ex = extract_xi(seq, nmax);
    r.merge(ex.report);
    run.extracted = ex.xi;
    run.closed_form = ex.xi;

    r.merge(verify_q_recursions(ex.xi, p));

    bool all = true;
    for (int n = 0; n <= nmax; ++n)
        for (int i = 1; i <= N; ++i) {
            const Q x1 = ex.xi.at(n, i, 1);
            for (int j = 1; j <= N && n + i - j > 0; ++j) {
                const Q v = xi_dual_hahn(n, i, j, x1, p);
                run.closed_form.at(n, i, j) = v;
                const bool ok = v == ex.xi.at(n, i, j);
                all = all && ok;
                r.check("xi_dual_hahn_corrected", "eq: xi dH", n, ok, ijn(i, j));
                const auto cl = xi_dual_hahn_claimed(n, i, j, p);
                r.check("xi_dual_hahn_claimed", "eq: xi dH", n, cl && *cl == ex.xi.at(n, i, j),
                        cl ? ijn(i, j) : ijn(i, j) + "; undefined (eps_j = 0)");
                // displayed shape up to the seed: xi(n,i,j)/xi(n,i,1)
                const auto c1 = xi_dual_hahn_claimed(n, i, 1, p);
                if (cl && c1 && *c1 != 0 && x1 != 0)
                    r.check("xi_dual_hahn_ratio_claimed", "eq: xi dH", n,
                            *cl / *c1 == ex.xi.at(n, i, j) / x1, ijn(i, j));

                // 3F2 against the recurrence at lambda* = x(x+gamma+delta+1), x = N - i
                const long M = N - 1;
                if (j - 1 <= M) {
                    const Q g = p.gamma(), delta = n + i - N;
                    const Q lambda = (N - i) * (g + 1 + n);
                    const auto s = dual_hahn_s(j - 1, lambda, g, delta, M);
                    const Q norm = pochhammer(g + 1, j - 1) * pochhammer_neg(M, j - 1);
                    bool agree = dual_hahn_lambda(j - 1, lambda, g, delta, M) * norm == s[j - 1] &&
                                 dual_hahn(j - 1, Q(N - i), g, delta, M) * norm == s[j - 1];
                    r.check("dual_hahn_3F2_vs_recurrence", "eq: xi dH", n, agree, ijn(i, j));
                }
            }
        }
    run.all_equal = all;

    // j = n+i boundary
    for (int n = 0; n <= nmax; ++n)
        for (int i = 1; i <= N; ++i) {
            const int j = n + i;
            if (j <= 1 || j > N) continue;
            const Q cur = ex.xi.at(n, i, j), prev = ex.xi.at(n, i, j - 1);
            const Q claimed = (Q(n * (N + 1 - i) * (i - 1)) / ((j - 1) * (N - j + 1)) + 1) * cur;
            const Q fixed = (1 + n * (p.d * (i - N - 1) - p.c) / (p.d * (j - 1) * (N - j + 1))) * cur;
            r.check("xi_boundary_dh_claimed", "Thm xi dual Hahn", n, prev == claimed, ijn(i, j));
            r.check("xi_boundary_dh_corrected", "Thm xi dual Hahn", n, prev == fixed, ijn(i, j));
        }
    r.check("xi_seed_011_claimed", "Thm xi dual Hahn", 0, ex.xi.at(0, 1, 1) == 1 / (p.nu + 2),
            "extracted " + to_string(ex.xi.at(0, 1, 1)));
    r.check("xi_seed_011", "Thm xi dual Hahn", 0, ex.xi.at(0, 1, 1) == 1);

    r.merge(verify_phi_psi(p));
    Report l71 = verify_lemma71(seq, p);
    run.lemma71 = l71.passed("lemma71");
    r.merge(l71);
    return run;
}

json dual_hahn_to_json(const DualHahnRun& run) {
    const DHParams& p = run.params;
    auto vec = [](const std::vector<Q>& v) {
        json a = json::array();
        for (const Q& q : v) a.push_back(to_string(q));
        return a;
    };
    json out;
    out["params"] = {{"N", p.N},          {"nu", to_string(p.nu)}, {"c", to_string(p.c)},
                     {"d", to_string(p.d)}, {"gamma", to_string(p.gamma())}, {"alpha", to_string(p.alpha)}};
    out["delta_family"] = {{"mu", vec(p.mu)}, {"delta_nu", vec(p.delta_nu)}, {"delta_nu1", vec(p.delta_nu1)}};
    out["xi_extracted"] = xi_to_json(run.extracted, {});
    out["xi_dual_hahn"] = xi_to_json(run.closed_form, {});
    out["all_equal"] = run.all_equal;
    out["lemma71"] = run.lemma71;
    out["report"] = run.report.to_json();
    return out;
}

}  // namespace mvop
