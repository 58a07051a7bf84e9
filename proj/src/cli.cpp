#include "mvop/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

namespace mvop {

namespace {

// Runs the tasks on up to thread_cap() workers; results keep the task order.
std::vector<Report> run_parallel(const std::vector<std::function<Report()>>& tasks) {
    std::vector<Report> out(tasks.size());
    std::vector<std::exception_ptr> err(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t k; (k = next++) < tasks.size();) {
            try {
                out[k] = tasks[k]();
            } catch (...) {
                err[k] = std::current_exception();
            }
        }
    };
    const int T = std::min<int>(thread_cap(), static_cast<int>(tasks.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < T; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& e : err)
        if (e) std::rethrow_exception(e);
    return out;
}

json spec_json(const WeightSpec& w) {
    json a = json::array(), d = json::array();
    for (const Q& q : w.a) a.push_back(to_string(q));
    for (const Q& q : w.delta) d.push_back(to_string(q));
    return {{"N", w.N}, {"nu", to_string(w.nu)}, {"a", a}, {"delta", d}};
}

json summary(const Report& r) {
    size_t displayed = 0, displayed_fail = 0;
    for (const auto& c : r.checks())
        if (c.displayed_form()) {
            ++displayed;
            if (!c.pass) ++displayed_fail;
        }
    return {{"checks", r.checks().size()},
            {"failures", r.failures() - displayed_fail},
            {"displayed_form_checks", displayed},
            {"displayed_form_mismatches", displayed_fail},
            {"verified", r.verified()}};
}

CommandResult finish(json out, const Report& r) {
    out["summary"] = summary(r);
    out["report"] = r.to_json();
    return {std::move(out), r.verified(), {}};
}

}  // namespace

int thread_cap() {
    const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("MVOP_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) return static_cast<int>(std::min<long>(v, hw));
        return 1;
    }
    return hw;
}

CommandResult compute_polys_command(const WeightSpec& w, int nmax) {
    w.validate();
    const OPSeq seq = compute_monic_ops(w, nmax);
    Report r = verify_orthogonality(seq, nmax);
    r.merge(verify_three_term(seq));
    if (w.N == 1) r.merge(verify_scalar_reduction(seq));
    json polys = json::array();
    for (int n = 0; n <= nmax; ++n)
        polys.push_back({{"n", n},
                         {"P", to_json(seq.P[n])},
                         {"H", to_json(seq.H[n])},
                         {"B", to_json(seq.B[n])},
                         {"C", to_json(seq.C[n])}});
    json out = {{"schema", 1}, {"command", "compute-polys"}, {"spec", spec_json(w)}, {"nmax", nmax}};
    out["polynomials"] = polys;
    return finish(std::move(out), r);
}

CommandResult verify_command(const WeightSpec& w, int nmax, const std::string& suite, const Q& c, const Q& d) {
    w.validate();
    const bool all = suite == "all";
    if (!all && suite != "operators" && suite != "laguerre" && suite != "dualhahn")
        throw std::invalid_argument("unknown suite '" + suite + "'");
    const bool need_seq = all || suite == "operators" || suite == "laguerre";
    std::optional<DHParams> dh;
    if (all || suite == "dualhahn") dh = build_delta_family(w.N, w.nu, c, d);

    OPSeq seq;
    if (need_seq) seq = compute_monic_ops(w, nmax);
    std::vector<std::function<Report()>> tasks;
    if (need_seq)
        tasks.push_back([&] {
            Report r = verify_orthogonality(seq, nmax);
            r.merge(verify_three_term(seq));
            if (w.N == 1) r.merge(verify_scalar_reduction(seq));
            return r;
        });
    if (all || suite == "operators") tasks.push_back([&] { return operator_suite(seq); });
    if (all || suite == "laguerre") tasks.push_back([&] { return laguerre_suite(seq); });
    if (dh) tasks.push_back([&] { return dual_hahn_suite(*dh, std::min(nmax, 4)).report; });

    Report r;
    for (const Report& part : run_parallel(tasks)) r.merge(part);
    json out = {{"schema", 1}, {"command", "verify"}, {"suite", suite}, {"spec", spec_json(w)}, {"nmax", nmax}};
    if (dh) out["dualhahn_params"] = {{"c", to_string(dh->c)}, {"d", to_string(dh->d)}};
    return finish(std::move(out), r);
}

CommandResult xi_command(const WeightSpec& w, int nmax) {
    w.validate();
    const OPSeq seq = compute_monic_ops(w, nmax);
    const XiExtraction ex = extract_xi(seq, nmax);
    const XiRecursion rec = xi_by_recursion(seq, compute_GI(seq, seq.top()), ex.xi, nmax);
    Report r = ex.report;
    r.merge(rec.report);
    r.check("xi_recursion_equals_extraction", "recurrencia xi general", -1, rec.xi == ex.xi);

    std::vector<std::string> prov;
    for (bool f : rec.fallback) prov.push_back(f ? "extraction" : "recursion");
    json out = {{"schema", 1}, {"command", "xi"}, {"spec", spec_json(w)}, {"nmax", nmax}};
    out["xi"] = xi_to_json(rec.xi, prov);
    json ev = json::array();
    for (const auto& e : rec.events) ev.push_back(e);
    out["events"] = ev;
    CommandResult res = finish(std::move(out), r);
    res.csv = xi_to_csv(rec.xi);
    return res;
}

CommandResult lie_command(const RPoly& phi) {
    if (phi.is_zero()) throw std::invalid_argument("phi must be nonzero");
    const LieAlg g = g_phi(phi);
    json out = {{"schema", 1}, {"command", "lie"}, {"phi", phi.str()}};
    json body = lie_to_json(g);
    for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
    out["k"] = k_value(phi);
    out["dimension_formula"] = dim_formula(phi);
    json I = json::array();
    for (int i : I_phi(phi)) I.push_back(i);
    out["I_phi"] = I;
    json psi = json::array();
    for (const Q& q : canonical_psi(phi)) psi.push_back(to_string(q));
    out["canonical_psi"] = psi;
    return finish(std::move(out), structure_report(phi));
}

CommandResult dualhahn_command(const DHParams& p, int nmax) {
    const DualHahnRun run = dual_hahn_suite(p, nmax);
    json out = {{"schema", 1}, {"command", "dualhahn"}, {"nmax", nmax}};
    json body = dual_hahn_to_json(run);
    for (auto it = body.begin(); it != body.end(); ++it)
        if (it.key() != "report") out[it.key()] = it.value();
    return finish(std::move(out), run.report);
}

namespace {

struct Args {
    int N = 2;
    std::string nu = "1/2", a, delta, phi = "x", c = "0", d = "1", out, suite = "all";
    int nmax = -1;
    int truncate = 0;
};

WeightSpec weight_from(const Args& a) {
    WeightSpec w;
    w.N = a.N;
    w.nu = parse_rational(a.nu);
    w.a = a.a.empty() ? std::vector<Q>(a.N > 0 ? a.N - 1 : 0, Q(-1)) : parse_rational_list(a.a);
    w.delta = a.delta.empty() ? std::vector<Q>(a.N > 0 ? a.N : 0, Q(1)) : parse_rational_list(a.delta);
    w.validate();
    return w;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

bool ends_with(const std::string& s, const std::string& tail) {
    return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"Exact computations for Laguerre-type matrix-valued orthogonal polynomials"};
    app.require_subcommand(1, 1);
    Args args;

    auto weight_opts = [&](CLI::App* s) {
        s->add_option("--N", args.N, "matrix size")->check(CLI::Range(1, 12));
        s->add_option("--nu", args.nu, "nu > 0, as p/q");
        s->add_option("--a", args.a, "comma list of N-1 nonzero rationals (default all -1)");
        s->add_option("--delta", args.delta, "comma list of N positive rationals (default all 1)");
        s->add_option("--nmax", args.nmax, "largest degree")->check(CLI::Range(0, 40));
        s->add_option("--out", args.out, "output file (.csv selects CSV for xi)");
    };
    auto* polys = app.add_subcommand("compute-polys", "monic MVOPs, norms and recurrence coefficients");
    weight_opts(polys);
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    weight_opts(verify);
    verify->add_option("--suite", args.suite, "operators|laguerre|dualhahn|all")
        ->check(CLI::IsMember({"operators", "laguerre", "dualhahn", "all"}));
    verify->add_option("--c", args.c, "dual Hahn family c >= 0");
    verify->add_option("--d", args.d, "dual Hahn family d > 0");
    auto* xi = app.add_subcommand("xi", "xi(n,i,j) table by recursion, checked against extraction");
    weight_opts(xi);
    auto* lie = app.add_subcommand("lie", "Lie algebra generated by D, D^dagger and x for phi");
    lie->add_option("--phi", args.phi, "polynomial in x, e.g. \"x^3+x^2\"");
    lie->add_option("--truncate", args.truncate, "use the degree-T truncation of e^x instead of --phi")
        ->check(CLI::Range(1, 12));
    lie->add_option("--out", args.out, "output file");
    auto* dh = app.add_subcommand("dualhahn", "mu = 1 family: dual Hahn closed form against extraction");
    dh->add_option("--N", args.N, "matrix size")->check(CLI::Range(1, 12));
    dh->add_option("--nu", args.nu, "nu > 0");
    dh->add_option("--c", args.c, "c >= 0");
    dh->add_option("--d", args.d, "d > 0");
    dh->add_option("--nmax", args.nmax, "largest degree")->check(CLI::Range(0, 40));
    dh->add_option("--out", args.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        CommandResult res;
        if (*polys) {
            res = compute_polys_command(weight_from(args), args.nmax < 0 ? 5 : args.nmax);
        } else if (*verify) {
            res = verify_command(weight_from(args), args.nmax < 0 ? 5 : args.nmax, args.suite,
                                 parse_rational(args.c), parse_rational(args.d));
        } else if (*xi) {
            res = xi_command(weight_from(args), args.nmax < 0 ? 5 : args.nmax);
        } else if (*lie) {
            res = lie_command(args.truncate > 0 ? truncated_exp(args.truncate) : parse_poly(args.phi));
        } else if (*dh) {
            const DHParams p =
                build_delta_family(args.N, parse_rational(args.nu), parse_rational(args.c), parse_rational(args.d));
            res = dualhahn_command(p, args.nmax < 0 ? 4 : args.nmax);
        }
        if (*xi && ends_with(args.out, ".csv"))
            emit(res.csv, args.out);
        else
            emit(res.out.dump(2) + "\n", args.out);
        return res.ok ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace mvop
