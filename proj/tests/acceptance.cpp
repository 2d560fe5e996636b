// Acceptance suite: runs every criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "permlab/dittert.hpp"
#include "permlab/io.hpp"
#include "permlab/lihwang.hpp"
#include "permlab/matcore.hpp"
#include "permlab/perm.hpp"
#include "permlab/roots.hpp"
#include "permlab/searchlab.hpp"
#include "permlab/symf.hpp"

using namespace permlab;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& msg) {
        if (!ok) {
            pass = false;
            if (notes.size() < 8) notes.push_back("failed: " + msg);
        }
    }
    void finding(const std::string& msg) { notes.push_back("finding: " + msg); }
};

// 1. naive = Ryser = Laplace exactly, 200 random rational matrices per order
Outcome criterion_oracle_agreement() {
    Outcome out;
    for (int n : {3, 4, 5, 6}) {
        std::vector<int> alpha(n / 2);
        for (int i = 0; i < n / 2; ++i) alpha[i] = i;
        for (int c = 0; c < 200; ++c) {
            const auto A = random_rational_matrix(n, mix_seed(1, 1000 * n + c));
            const Rat p = per_naive(A);
            out.require(per_ryser(A) == p, "Ryser != naive");
            out.require(laplace_expand(A, alpha) == p, "Laplace != naive");
            if (!out.pass) return out;
        }
    }
    return out;
}

// 2. per(J_4) = 3/32, per(J_6) = 5/324 exactly
Outcome criterion_uniform_permanents() {
    Outcome out;
    out.require(per_ryser(MatQ::uniform(4)) == Rat(3, 32), "per(J_4) != 3/32");
    out.require(per_naive(MatQ::uniform(4)) == Rat(3, 32), "per_naive(J_4) != 3/32");
    out.require(per_ryser(MatQ::uniform(6)) == Rat(5, 324), "per(J_6) != 5/324");
    return out;
}

// 3. Eberlein-Mudholkar formula and both T_2 identities on 500 samples
Outcome criterion_em_formula() {
    Outcome out;
    for (int c = 0; c < 500; ++c) {
        const auto A = random_birkhoff(4, 8, mix_seed(3, c));
        out.require(std::abs(em_permanent4(A) - per_ryser(A)) <= 1e-12, "EM formula off by more than 1e-12");
        const auto [r1, r2] = em_identities4(A);
        out.require(std::abs(r1) <= 1e-12, "T_2 e_2 identity residual above 1e-12");
        out.require(std::abs(r2) <= 1e-12, "T_2 e_3 identity residual above 1e-12");
        if (!out.pass) return out;
    }
    return out;
}

// 4. corrected quartic reproduces 32*gap at off-node points; J_4 anomaly
Outcome criterion_corrected_quartic() {
    Outcome out;
    const double probes[] = {0.1, 0.3, 0.37, 0.63, 0.9}; // none is an interpolation node
    for (int c = 0; c < 500; ++c) {
        const auto A = random_birkhoff(4, 8, mix_seed(4, c));
        const auto f = quartic_corrected(A);
        for (double al : probes) {
            out.require(std::abs(f.eval(al) - 32.0 * gap_direct(A, al)) <= 1e-12,
                        "corrected quartic misses 32*gap at an off-node point");
        }
        if (!out.pass) return out;
    }
    out.require(quartic_corrected(MatQ::uniform(4)).is_zero(), "quartic_corrected(J_4) is not identically zero");
    const auto printed = quartic_paper(MatQ::uniform(4));
    out.require(printed.coeffs() == std::vector<Rat>{Rat(128, 3), Rat(0), Rat(0), Rat(0), Rat(6)},
                "printed quartic at J_4 is not (128/3, 0, 0, 0, 6)");
    out.finding("printed quartic at J_4 equals 128/3 + 6a^4, not the zero polynomial forced by its defining identity");
    return out;
}

// 5. Table-1 reproduction by minimizing the printed quartic
Outcome criterion_table1() {
    Outcome out;
    struct Row {
        const char* interval;
        double lo, hi, paper_alpha, paper_min;
    };
    const Row rows[] = {
        {"[0.5,1]", 0.5, 1.0, 0.5, 0.1250},     {"[0.4,1]", 0.4, 1.0, 0.4, -0.5472},
        {"[0.45,1]", 0.45, 1.0, 0.45, -0.2654}, {"[0.48,1]", 0.48, 1.0, 0.48, -0.0452},
        {"[0.485,1]", 0.485, 1.0, 0.45, -0.0044}, {"[0.486,1]", 0.486, 1.0, 0.486, 0.0039},
        {"[0,1]", 0.0, 1.0, 0.2545, -0.8675},
    };
    for (const auto& row : rows) {
        search::SearchConfig cfg;
        cfg.domain = search::Domain::omega4_quartic_paper;
        cfg.restarts = 50;
        cfg.max_evals = 20000;
        cfg.seed = 5;
        cfg.lo = row.lo;
        cfg.hi = row.hi;
        const auto res = search::minimize_quartic_paper(cfg);
        std::ostringstream os;
        os << row.interval << ": paper (" << row.paper_alpha << ", " << row.paper_min << "), found ("
           << res.best_alpha << ", " << res.best_value << ")";
        if (res.best_value < row.paper_min - 0.02) {
            out.finding("below paper minimum on " + std::string(row.interval) + ": " + os.str());
            continue;
        }
        const bool value_ok = std::abs(res.best_value - row.paper_min) <= 0.02;
        const bool alpha_ok = std::abs(res.best_alpha - row.paper_alpha) <= 0.01;
        out.require(value_ok && alpha_ok, os.str());
    }
    if (!out.pass)
        out.finding(
            "the printed quartic is bounded below by roughly 128/3 - 10 on all of Omega_4 x [0,1] (its constant "
            "term is 128/3 and the four statistic terms cannot overcome it), so the tabulated minima near zero are "
            "not minima of this polynomial; the true-gap column of `permlab table1` reaches them instead");
    return out;
}

// 6. n=6 factorization gap = t(1-t) F_A(t) on a 21-point grid, 200 samples
Outcome criterion_f6_factorization() {
    Outcome out;
    for (int c = 0; c < 200; ++c) {
        const auto A = random_birkhoff(6, 8, mix_seed(6, c));
        const auto F = f6_poly(A);
        for (int g = 0; g <= 20; ++g) {
            const double t = g / 20.0;
            out.require(std::abs(gap_direct(A, t) - t * (1 - t) * F.eval(t)) <= 1e-10,
                        "gap != t(1-t) F_A(t) on the grid");
        }
        if (!out.pass) return out;
    }
    return out;
}

// 7. closed forms for sigma_2 and sigma_3, 200 samples per order
Outcome criterion_closed_forms() {
    Outcome out;
    for (int n : {4, 5, 6}) {
        for (int c = 0; c < 200; ++c) {
            const auto A = random_birkhoff(n, 8, mix_seed(7, 1000 * n + c));
            out.require(std::abs(sigma2_closed(A) - sigma_k(A, 2)) <= 1e-12, "sigma2_closed misses enumeration");
            out.require(std::abs(sigma3_closed(A) - sigma_k(A, 3)) <= 1e-12, "sigma3_closed misses enumeration");
            if (!out.pass) return out;
        }
    }
    return out;
}

// 8. root of the cubic 106t^3 - 418t^2 + 465t - 153 in (0,1)
Outcome criterion_cubic_root() {
    Outcome out;
    const PolyQ cubic(std::vector<Rat>{Rat(-153), Rat(465), Rat(-418), Rat(106)});
    const auto r = roots_in_open_unit(cubic, 1e-13);
    out.require(r.has_value(), "no root found in (0,1)");
    if (r) {
        const double quoted = 0.6216986477375;
        std::ostringstream os;
        os << "isolated root " << io::format_full(r->mid()) << ", quoted constant " << quoted << ", difference "
           << io::format_full(r->mid() - quoted);
        out.require(std::abs(r->mid() - quoted) <= 1e-10, os.str());
        if (!out.pass)
            out.finding(
                "the root of the quoted cubic is 0.621698636735026 (exact bisection of its factor 106t^2-312t+153); "
                "the quoted 13-digit constant is accurate only to 8 digits, so a 1e-10 match is impossible");
    }
    return out;
}

// 9. theorem-2.2 chain on 100 qualifying samples plus the exact terminal identity
Outcome criterion_bound_chain() {
    Outcome out;
    out.require(terminal_zero_identity().is_zero(), "terminal polynomial identity is not exactly zero");
    int done = 0;
    std::uint64_t tick = 0;
    while (done < 100 && tick < 5000) {
        const auto A = random_birkhoff(6, 8, mix_seed(9, tick++));
        if (!theorem22_hypothesis(A).holds()) continue;
        ++done;
        for (double t : {0.7836, 0.85, 0.95, 1.0}) {
            const auto chain = bound_chain_check6(A, t);
            for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                out.require(chain[i + 1] <= chain[i] + 1e-12, "chain not non-increasing");
            out.require(chain.back() >= -1e-12, "terminal chain value below -1e-12");
        }
        if (!out.pass) return out;
    }
    out.require(done == 100, "fewer than 100 hypothesis-qualifying samples in 5000 draws");
    return out;
}

// 10. section-3 identities, exact over 50 rational parameter sets per branch
Outcome criterion_dittert_identities() {
    Outcome out;
    Rng rng(4242);
    auto rand_pos = [&rng] { return Rat(1 + rng.below(9), 1 + rng.below(7)); };
    for (int c = 0; c < 50; ++c) {
        PerturbParams<Rat> P;
        P.a = rand_pos();
        P.y = rand_pos();
        P.b = rand_pos();
        P.z = P.b + rand_pos(); // epsilon stays below both
        P.epsilon = Rat(1, 1000 + rng.below(1000));
        P.l = rand_pos();
        P.m = rand_pos();
        P.v = rand_pos();

        // x < y branch
        P.x = P.y * Rat(1 + rng.below(6), 8);
        for (const auto& res : perturbation_identities(P)) {
            if (res.name == "Ateps_slope_second_diff") continue;
            if (res.name == "Ateps_slope_residual_eps1") {
                out.require(scalar_abs(res.value) <= Rat(4) * P.y * P.y * P.epsilon, "slope residual above first order");
                out.require(res.value == Rat(4) * P.y * P.y * P.epsilon, "slope residual not exactly 4y^2 eps");
                continue;
            }
            if (res.name == "Ateps_slope_residual_eps2") continue;
            out.require(res.value == Rat(0), "nonzero exact residual in " + res.name);
        }
        // phi difference against the stated closed form
        const auto at = build_perturbation(Perturbation::Atilde, P);
        out.require(detail::phi_ij_raw(at, 0, 0) - detail::phi_ij_raw(at, 1, 0) ==
                        Rat(3) * P.y * P.y * (Rat(3) * P.b - Rat(3) * P.a + Rat(7) * P.x),
                    "phi_11 - phi_21 != 3y^2(3b-3a+7x)");
        // phi_42 - phi_33 = a y^2 on the x >= y branch
        PerturbParams<Rat> Q = P;
        Q.x = P.y + rand_pos();
        const auto a4 = build_perturbation(Perturbation::A4, Q);
        out.require(detail::phi_ij_raw(a4, 3, 1) - detail::phi_ij_raw(a4, 2, 2) == Q.a * Q.y * Q.y,
                    "phi_42 - phi_33 != a y^2 on A_4");
        for (const auto& res : perturbation_identities(Q))
            if (res.name == "per(A4)-per(A3)") out.require(res.value == Rat(0), "per(A_4) != per(A_3)");
        if (!out.pass) return out;
    }
    return out;
}

// 11. Dittert empirical support on K_4
Outcome criterion_dittert_support() {
    Outcome out;
    for (int c = 0; c < 100000; ++c) {
        const double d = phi_vs_jn(random_kn(4, mix_seed(11, c)));
        out.require(d >= -1e-12, "phi(J_4) - phi(X) below -1e-12");
        if (!out.pass) return out;
    }
    search::SearchConfig cfg;
    cfg.domain = search::Domain::k4_phi;
    cfg.restarts = 50;
    cfg.max_evals = 60000;
    cfg.seed = 11;
    const auto res = search::maximize_phi_k4(cfg);
    out.require(res.best_value <= 61.0 / 32 + 1e-9, "search exceeded phi(J_4)");
    int close = 0;
    for (const auto& M : res.per_restart_matrices)
        if (search::max_norm_to_uniform(M) <= 1e-4) ++close;
    std::ostringstream os;
    os << close << "/50 restarts within 1e-4 of J_4";
    out.require(close >= 45, os.str());
    return out;
}

// 12. Lih-Wang empirical support for n=4 on [1/2, 1]
Outcome criterion_lihwang_support() {
    Outcome out;
    search::SearchConfig cfg;
    cfg.domain = search::Domain::omega4_gap_true;
    cfg.restarts = 50;
    cfg.max_evals = 20000;
    cfg.seed = 12;
    cfg.lo = 0.5;
    cfg.hi = 1.0;
    const auto res = search::minimize_gap_true(cfg);
    std::ostringstream os;
    os << "minimize_gap_true on [0.5,1] found " << io::format_full(res.best_value);
    out.require(res.best_value >= -1e-7, os.str());
    Rng rng(777);
    for (int c = 0; c < 10000; ++c) {
        const auto A = random_birkhoff(4, 8, mix_seed(12, c));
        const double t = rng.uniform(0.5, 1.0);
        out.require(gap_direct(A, t) >= -1e-12, "sampled gap below -1e-12 on [0.5,1]");
        if (!out.pass) return out;
    }
    return out;
}

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "permanent oracle agreement (naive = Ryser = Laplace, exact)", 30, criterion_oracle_agreement},
        {2, "per(J_4) = 3/32 and per(J_6) = 5/324, exact", 1, criterion_uniform_permanents},
        {3, "Eberlein-Mudholkar formula and T_2 identities on Omega_4", 30, criterion_em_formula},
        {4, "corrected quartic matches 32*gap off-node; J_4 misprint documented", 30, criterion_corrected_quartic},
        {5, "Table-1 reproduction by minimizing the printed quartic", 600, criterion_table1},
        {6, "n=6 factorization gap = t(1-t) F_A(t)", 120, criterion_f6_factorization},
        {7, "sigma_2 / sigma_3 closed forms", 120, criterion_closed_forms},
        {8, "cubic root isolation against the quoted threshold constant", 1, criterion_cubic_root},
        {9, "theorem-2.2 bound chain and exact terminal identity", 300, criterion_bound_chain},
        {10, "section-3 perturbation identities, exact rational", 60, criterion_dittert_identities},
        {11, "Dittert empirical support on K_4 (sampling + search)", 600, criterion_dittert_support},
        {12, "Lih-Wang n=4 empirical support on [1/2, 1]", 300, criterion_lihwang_support},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.notes.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) {
            out.pass = false;
            out.notes.push_back("over time budget");
        }
        std::printf("[%s] %2d: %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", c.id, c.label, secs);
        for (const auto& n : out.notes) std::printf("          %s\n", n.c_str());
        if (!out.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
