// Acceptance criteria, one PASS/FAIL line each. Usage: acceptance [k ...], default all seven.
// A criterion that names a displayed formula passes only if that formula holds as displayed;
// corrected variants and oracle-backed checks are listed underneath.

#include "mvop/dualhahn.hpp"
#include "mvop/lie.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>

using namespace mvop;

namespace {

std::vector<WeightSpec> grid() {
    std::vector<WeightSpec> out;
    const std::vector<Q> a2{Q(1, 2), Q(-3)}, d2{Q(2), Q(1), Q(1, 3)};
    for (int N = 1; N <= 3; ++N)
        for (const Q& nu : {Q(1, 2), Q(1), Q(5, 2)})
            for (int choice = 0; choice < 2; ++choice) {
                WeightSpec w;
                w.N = N;
                w.nu = nu;
                for (int k = 0; k + 1 < N; ++k) w.a.push_back(choice ? a2[k] : Q(-1));
                for (int k = 0; k < N; ++k) w.delta.push_back(choice ? d2[k] : Q(1));
                out.push_back(w);
            }
    return out;
}

std::vector<DHParams> dh_grid() {
    std::vector<DHParams> out;
    for (int N : {2, 3})
        for (const Q& nu : {Q(1, 2), Q(1)})
            for (int c : {0, 1, 2}) out.push_back(build_delta_family(N, nu, Q(c), Q(1)));
    return out;
}

// Suite reports are shared between criteria, so build each once.
struct Cache {
    std::optional<Report> ops, lag, dh, lie;
    const Report& operators() {
        if (!ops) {
            ops.emplace();
            for (const auto& w : grid()) ops->merge(operator_suite(compute_monic_ops(w, 5)));
        }
        return *ops;
    }
    const Report& laguerre() {
        if (!lag) {
            lag.emplace();
            for (const auto& w : grid()) lag->merge(laguerre_suite(compute_monic_ops(w, 5)));
        }
        return *lag;
    }
    const Report& dualhahn() {
        if (!dh) {
            dh.emplace();
            for (const auto& p : dh_grid()) dh->merge(dual_hahn_suite(p, 4).report);
        }
        return *dh;
    }
    const Report& lie_family() {
        if (!lie) lie = lie_family_report();
        return *lie;
    }
};

struct Outcome {
    bool pass = true;
    std::vector<std::string> lines;

    // Every check with this id passed and there is at least one.
    bool need(const Report& r, const std::string& id, const std::string& label = {}) {
        size_t total = 0, bad = 0;
        for (const auto& c : r.checks())
            if (c.id == id) {
                ++total;
                if (!c.pass) ++bad;
            }
        const bool ok = total > 0 && bad == 0;
        pass = pass && ok;
        lines.push_back(std::string(ok ? "ok   " : "FAIL ") + (label.empty() ? id : label) + "  (" +
                        std::to_string(total - bad) + "/" + std::to_string(total) + ")");
        return ok;
    }
    // All checks that are not displayed-form probes.
    void need_verified(const Report& r, const std::string& label) {
        size_t total = 0, bad = 0;
        for (const auto& c : r.checks())
            if (!c.displayed_form()) {
                ++total;
                if (!c.pass) ++bad;
            }
        pass = pass && bad == 0 && total > 0;
        lines.push_back(std::string(bad == 0 ? "ok   " : "FAIL ") + label + "  (" + std::to_string(total - bad) +
                        "/" + std::to_string(total) + ")");
    }
    void info(const std::string& s) { lines.push_back("info " + s); }
};

std::string tally(const Report& r, const std::string& id) {
    size_t total = 0, good = 0;
    for (const auto& c : r.checks())
        if (c.id == id) {
            ++total;
            if (c.pass) ++good;
        }
    return std::to_string(good) + "/" + std::to_string(total);
}

Outcome criterion1(Cache&) {
    Outcome o;
    Report r;
    for (const auto& w : grid()) r.merge(verify_orthogonality(compute_monic_ops(w, 6), 6));
    o.need(r, "orthogonality", "<P_n,P_m> = delta_nm H_n, n,m <= 6");
    o.need(r, "H_positive_definite", "leading minors of H_n > 0");
    o.need_verified(r, "all orthogonality checks");
    return o;
}

Outcome criterion2(Cache&) {
    Outcome o;
    Report r;
    for (const auto& w : grid())
        if (w.N == 1) {
            const OPSeq seq = compute_monic_ops(w, 6);
            r.merge(verify_scalar_reduction(seq));
            r.merge(verify_R(seq));
        }
    o.need(r, "scalar_X1", "X(1) = -(nu+2)");
    o.need(r, "scalar_C", "C_n = n(n+nu+1)");
    o.need(r, "scalar_xi", "xi(n,1,1) = (-1)^n n!");
    o.need(r, "scalar_B", "B_n against the scalar recurrence");
    o.need(r, "scalar_C_recurrence", "C_n against the scalar recurrence");
    o.need(r, "scalar_P", "P_n against the scalar recurrence");
    return o;
}

Outcome criterion3(Cache& cache) {
    Outcome o;
    const Report& r = cache.operators();
    for (const char* id : {"adjoint_D_Ddag", "adjoint_Ddag_D"}) o.need(r, id);
    for (const char* id : {"intertwine_D_M", "intertwine_Ddag_Mdag", "intertwine_D2_Gamma", "intertwine_C_MC"})
        o.need(r, id);
    for (const char* id : {"fla_A0n", "fla_Ad-1n", "fla_A-1n"}) o.need(r, id);
    for (const char* id : {"ML.1", "MdL0", "MdL-1_claimed", "MMd0", "GamaL-1", "GamaM0", "GamaMdag-1"}) o.need(r, id);
    o.need(r, "P5.6_BJ");
    o.need(r, "P5.6_CJ_claimed");
    o.need(r, "Casimir");
    const bool strict = o.pass;
    Outcome aux;
    aux.need(r, "MdL-1_corrected");
    aux.need(r, "P5.6_CJ_corrected");
    aux.need_verified(r, "operator suite, corrected forms in place of the displayed ones");
    for (auto& l : aux.lines) o.info(l);
    o.pass = strict;
    return o;
}

Outcome criterion4(Cache& cache) {
    Outcome o;
    const Report& r = cache.laguerre();
    o.need(r, "R_laguerre_proportional");
    o.need(r, "R_zero_pattern");
    o.need(r, "xi_recursion_equals_extraction", "extracted xi = recursed xi, n <= 5");
    for (const char* id : {"xi_seed_K_claimed", "xi_rec_c_claimed", "xi_boundary_a_claimed", "xi_boundary_b_claimed",
                           "xi_boundary_c_claimed"})
        o.need(r, id);
    o.need(r, "G_diagonal");
    o.need(r, "I_bidiagonal");
    o.need(r, "recHn");
    o.need(r, "X1_from_H0_claimed", "H_0 -> X(1) with the displayed seed");
    o.need(r, "X1_from_H0");
    o.need(r, "H1_from_H0");
    const bool strict = o.pass;
    Outcome aux;
    for (const char* id : {"xi_rec_c_corrected", "xi_boundary_a_corrected", "xi_boundary_b_corrected",
                           "xi_boundary_c_corrected", "X_rec_a_corrected", "X_rec_b_corrected"})
        aux.need(r, id);
    aux.need_verified(r, "Laguerre suite, corrected forms in place of the displayed ones");
    for (auto& l : aux.lines) o.info(l);
    o.pass = strict;
    return o;
}

Outcome criterion5(Cache& cache) {
    Outcome o;
    const Report& r = cache.dualhahn();
    o.need(r, "xi_dual_hahn_claimed", "closed form as displayed = extracted xi");
    o.need(r, "xi_boundary_dh_claimed", "j = n+i boundary recursion as displayed");
    o.need(r, "lemma71");
    o.need(r, "epsilon_lemma_claimed", "eps_j / eps_{j+1} M_j = 1");
    o.need(r, "q_relation_claimed");
    o.need(r, "qtilde_relation_claimed");
    o.need(r, "dual_hahn_3F2_vs_recurrence");
    const bool strict = o.pass;
    Outcome aux;
    for (const char* id : {"xi_dual_hahn_corrected", "xi_boundary_dh_corrected", "epsilon_recursion_multiplicative",
                           "q_relation_corrected", "qtilde_relation_corrected", "phi_cor53", "psi_cor53",
                           "phi_star_conjugated", "psi_star_conjugated", "phi_degree", "psi_degree"})
        aux.need(r, id);
    aux.need_verified(r, "dual Hahn suite, corrected forms in place of the displayed ones");
    for (auto& l : aux.lines) o.info(l);
    o.info("displayed (Delta^{-1} A Delta^{(nu+1)})^T superdiagonal: " + tally(r, "lemma71_C_entry_claimed"));
    o.pass = strict;
    return o;
}

Outcome criterion6(Cache& cache) {
    Outcome o;
    const Report& r = cache.lie_family();
    o.need(r, "lie_dimension", "dim g_phi = k+2 over the family");
    o.need(r, "lie_paper_value_x3");
    o.need(r, "lie_paper_value_x3_x2");
    o.need(r, "lie_iso_vs_conformal");
    o.need(r, "lie_z_central");
    o.need(r, "ext_sl2_a_claimed", "extended algebra sl2 relations (a1,a2,a3) as displayed");
    o.need(r, "ext_sl2_hat_claimed", "extended algebra sl2 relations (hatted basis) as displayed");
    o.need(r, "ext_center", "2-dimensional center");
    o.need(r, "ext_casimir_C1_claimed", "Casimir C1 ad-invariance as displayed");
    o.need(r, "ext_casimir_C2_C3");
    o.need(r, "lie_truncated_exp_growth", "truncated e^x closure grows for T = 4..8");
    const bool strict = o.pass;
    Outcome aux;
    aux.need(r, "ext_sl2_corrected", "sl2 triple e=a1, h=-a2, f=a3+a1/4-a2/2");
    aux.need(r, "ext_casimir_C1_corrected", "invariant quadratic (a1-a2)^2 + 2(a1 a3 + a3 a1)");
    aux.need_verified(r, "Lie family, corrected forms in place of the displayed ones");
    for (auto& l : aux.lines) o.info(l);
    o.pass = strict;
    return o;
}

Outcome criterion7(Cache& cache) {
    Outcome o;
    const Report& lag = cache.laguerre();
    const Report& dh = cache.dualhahn();
    // Each item resolves when the oracle-backed variant holds on the whole grid.
    if (o.need(lag, "H0_closed_form", "H_0 Pochhammer index (nu)_{i+j-r+1}"))
        o.info("  displayed index agrees on " + tally(lag, "H0_closed_form_claimed"));
    if (o.need(dh, "xi_seed_011", "xi(0,1,1) = 1"))
        o.info("  displayed 1/(nu+2) agrees on " + tally(dh, "xi_seed_011_claimed"));
    if (o.need(lag, "xi_boundary_b_corrected", "boundary (b) coefficients derived from the I/R matrix identity"))
        o.info("  displayed N1, N2 agree on " + tally(lag, "xi_boundary_b_claimed"));
    o.need(lag, "eq_matrix_IR");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::map<int, std::pair<std::string, std::function<Outcome(Cache&)>>> criteria{
        {1, {"oracle soundness", criterion1}},
        {2, {"scalar reduction (N = 1)", criterion2}},
        {3, {"operator suite", criterion3}},
        {4, {"Laguerre closed forms and recursions", criterion4}},
        {5, {"dual Hahn closed form", criterion5}},
        {6, {"Lie algebras", criterion6}},
        {7, {"documented discrepancies resolve", criterion7}},
    };
    std::vector<int> pick;
    for (int k = 1; k < argc; ++k) pick.push_back(std::atoi(argv[k]));
    if (pick.empty())
        for (const auto& [k, _] : criteria) pick.push_back(k);

    Cache cache;
    bool all = true;
    for (int k : pick) {
        auto it = criteria.find(k);
        if (it == criteria.end()) {
            std::cerr << "unknown criterion " << k << "\n";
            return 2;
        }
        Outcome o = it->second.second(cache);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << it->second.first << "\n";
        for (const auto& l : o.lines) std::cout << "    " << l << "\n";
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
