#include "permlab/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "permlab/dittert.hpp"
#include "permlab/lihwang.hpp"
#include "permlab/matcore.hpp"
#include "permlab/perm.hpp"
#include "permlab/poly.hpp"
#include "permlab/roots.hpp"
#include "permlab/rng.hpp"
#include "permlab/symf.hpp"

namespace permlab::verify {

namespace {

class Suite {
  public:
    explicit Suite(std::string name) : start_(std::chrono::steady_clock::now()) { res_.suite = std::move(name); }

    void check(bool ok, const std::string& what, const MatD* witness = nullptr) {
        ++res_.checks;
        if (!ok) {
            ++res_.failures;
            if (res_.failure_notes.size() < 20) res_.failure_notes.push_back(what);
            if (!res_.witness && witness) res_.witness = *witness;
        }
    }

    SuiteResult finish() {
        res_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return res_;
    }

  private:
    SuiteResult res_;
    std::chrono::steady_clock::time_point start_;
};

std::string note(const char* what, double value) {
    std::ostringstream os;
    os << what << " (residual " << value << ")";
    return os.str();
}

// brute-force elementary symmetric by subset enumeration
Rat elem_sym_enum(const std::vector<Rat>& x, int r) {
    const int n = static_cast<int>(x.size());
    Rat total(0);
    for (const auto& s : subsets(n, r)) {
        Rat prod(1);
        for (int i : s) prod *= x[i];
        total += prod;
    }
    return total;
}

} // namespace

SuiteResult run_symf4(long samples, std::uint64_t seed) {
    Suite suite("symf4");

    // elem_sym against subset enumeration, exact
    {
        Rng lens(mix_seed(seed, 101));
        for (int c = 0; c < 100; ++c) {
            const int n = 2 + static_cast<int>(lens.below(7));
            MatQ M = random_rational_matrix(n, mix_seed(seed, 200 + c));
            const auto x = M.col(0);
            for (int r = 0; r <= n; ++r)
                suite.check(elem_sym(x, r) == elem_sym_enum(x, r), "elem_sym != subset enumeration");
        }
    }

    // inclusion-exclusion permanent equals naive and Ryser, exact
    for (int c = 0; c < 50; ++c) {
        const MatQ A = random_rational_matrix(4, mix_seed(seed, 300 + c));
        const Rat p = per_naive(A);
        suite.check(per_incl_excl(A) == p, "per_incl_excl != per_naive (exact)");
        suite.check(per_ryser(A) == p, "per_ryser != per_naive (exact)");
    }

    // column-family identities on Omega_4 samples
    for (long c = 0; c < samples; ++c) {
        const MatD A = random_birkhoff(4, 6, mix_seed(seed, 400 + static_cast<std::uint64_t>(c)));
        double tn = 0;
        for (const auto& v : t_family(A, 4).vectors) tn += to_double(elem_sym(v, 4));
        suite.check(std::abs(tn - 1.0) <= 1e-12, note("sum_{T_n} e_n != 1 on Omega_4", tn - 1.0), &A);
        const auto [r1, r2] = em_identities4(A);
        suite.check(std::abs(r1) <= 1e-12, note("T_2 e_2 identity residual", r1), &A);
        suite.check(std::abs(r2) <= 1e-12, note("T_2 e_3 identity residual", r2), &A);
        const double em = em_permanent4(A);
        const double ry = per_ryser(A);
        suite.check(std::abs(em - ry) <= 1e-12, note("em_permanent4 != per_ryser", em - ry), &A);
    }

    // negative control: identities must not hold off the domain
    {
        long nonzero = 0;
        const long trials = 50;
        for (long c = 0; c < trials; ++c) {
            const MatD X = random_kn(4, mix_seed(seed, 900 + static_cast<std::uint64_t>(c)));
            const auto [r1, r2] = detail::em_identity_residuals_raw(X);
            if (std::abs(r1) > 1e-6 || std::abs(r2) > 1e-6) ++nonzero;
        }
        suite.check(nonzero == trials, "em identities unexpectedly vanish on non-doubly-stochastic inputs");
    }

    return suite.finish();
}

SuiteResult run_lihwang4(long samples, std::uint64_t seed) {
    Suite suite("lihwang4");

    // corrected quartic reproduces 32*gap at off-node points
    const double probes[] = {0.1, 0.3, 0.37, 0.63, 0.9};
    for (long c = 0; c < samples; ++c) {
        const MatD A = random_birkhoff(4, 8, mix_seed(seed, 1000 + static_cast<std::uint64_t>(c)));
        const PolyD f = quartic_corrected(A);
        for (double al : probes) {
            const double r = f.eval(al) - 32.0 * gap_direct(A, al);
            suite.check(std::abs(r) <= 1e-12, note("quartic_corrected != 32*gap at probe", r), &A);
        }
    }

    // exact-mode spot check of the same identity
    for (int c = 0; c < 10; ++c) {
        const MatQ A = random_birkhoff_exact(4, 6, mix_seed(seed, 1500 + c));
        const PolyQ f = quartic_corrected(A);
        const Rat al(37, 100);
        suite.check(f.eval(al) == Rat(32) * gap_direct(A, al), "exact quartic_corrected != 32*gap");
    }

    // J_4: corrected vanishes, printed does not (documented discrepancy)
    {
        const MatQ J = MatQ::uniform(4);
        suite.check(quartic_corrected(J).is_zero(), "quartic_corrected(J_4) not identically zero");
        const PolyQ printed = quartic_paper(J);
        const PolyQ expected(std::vector<Rat>{Rat(128, 3), Rat(0), Rat(0), Rat(0), Rat(6)});
        suite.check(printed == expected, "quartic_paper(J_4) != (128/3, 0, 0, 0, 6)");
        suite.check(!printed.is_zero(), "quartic_paper(J_4) unexpectedly zero");
    }

    // gap nonnegativity on [1/2, 1] (empirical support, not a proof)
    for (long c = 0; c < samples; ++c) {
        const MatD A = random_birkhoff(4, 10, mix_seed(seed, 2000 + static_cast<std::uint64_t>(c)));
        for (int g = 0; g <= 10; ++g) {
            const double t = 0.5 + 0.05 * g;
            const double v = gap_direct(A, t);
            suite.check(v >= -1e-12, note("gap negative on [0.5,1]", v), &A);
        }
    }

    return suite.finish();
}

SuiteResult run_lihwang6(long samples, std::uint64_t seed) {
    Suite suite("lihwang6");

    // factorization gap = t(1-t) F_A(t) on a 21-point grid
    for (long c = 0; c < samples; ++c) {
        const MatD A = random_birkhoff(6, 8, mix_seed(seed, 3000 + static_cast<std::uint64_t>(c)));
        const PolyD F = f6_poly(A);
        for (int g = 0; g <= 20; ++g) {
            const double t = g / 20.0;
            const double r = gap_direct(A, t) - t * (1 - t) * F.eval(t);
            suite.check(std::abs(r) <= 1e-10, note("gap != t(1-t)F_A(t)", r), &A);
        }
    }

    // closed forms for sigma_2, sigma_3
    for (int n : {4, 5, 6}) {
        const long per_order = std::max<long>(1, samples / 3);
        for (long c = 0; c < per_order; ++c) {
            const MatD A = random_birkhoff(n, 8, mix_seed(seed, 4000 + 100 * n + static_cast<std::uint64_t>(c)));
            const double r2 = sigma2_closed(A) - sigma_k(A, 2);
            const double r3 = sigma3_closed(A) - sigma_k(A, 3);
            suite.check(std::abs(r2) <= 1e-12, note("sigma2_closed mismatch", r2), &A);
            suite.check(std::abs(r3) <= 1e-12, note("sigma3_closed mismatch", r3), &A);
        }
    }

    // row bounds used by the n=6 chain
    for (long c = 0; c < samples; ++c) {
        const MatD A = random_birkhoff(6, 8, mix_seed(seed, 5000 + static_cast<std::uint64_t>(c)));
        for (int i = 0; i < 6; ++i) {
            double sq = 0, cu = 0;
            for (int j = 0; j < 6; ++j) {
                sq += A(i, j) * A(i, j);
                cu += A(i, j) * A(i, j) * A(i, j);
            }
            suite.check(cu - sq * sq >= -1e-15, note("row cube-square inequality violated", cu - sq * sq), &A);
            suite.check(sq >= 1.0 / 6.0 - 1e-15, note("row sum of squares below 1/6", sq), &A);
        }
    }

    // terminal identity of the chain is exactly zero
    suite.check(terminal_zero_identity().is_zero(), "terminal chain identity is not the zero polynomial");

    // the subpermanent-ratio diagnostic is tight at J_n
    for (int n : {4, 5, 6}) {
        const MatD J = MatD::uniform(n);
        for (int k = 2; k <= n; ++k) {
            const double slack = holens_dokovic_ratio(J, k);
            suite.check(std::abs(slack) <= 1e-12, note("subpermanent ratio not tight at J_n", slack));
        }
    }

    // chain at qualifying samples
    {
        long done = 0;
        std::uint64_t tick = 0;
        const long want = std::max<long>(1, samples / 4);
        while (done < want && tick < static_cast<std::uint64_t>(want) * 50) {
            const MatD A = random_birkhoff(6, 8, mix_seed(seed, 6000 + tick++));
            if (!theorem22_hypothesis(A).holds()) continue;
            ++done;
            for (double t : {0.7836, 0.85, 0.95, 1.0}) {
                const auto chain = bound_chain_check6(A, t);
                const double top = chain.front();
                for (std::size_t i = 0; i + 1 < chain.size(); ++i)
                    suite.check(chain[i + 1] <= chain[i] + 1e-12, note("chain not non-increasing", chain[i + 1] - chain[i]), &A);
                for (const double v : chain)
                    suite.check(v <= top + 1e-12, note("chain element above F_A(t)", v - top), &A);
                suite.check(chain.back() >= -1e-12, note("terminal chain value negative", chain.back()), &A);
            }
        }
        suite.check(done == want, "not enough hypothesis-qualifying samples found");
    }

    // root isolation agrees with dense grid sign scanning
    {
        Rng rng(mix_seed(seed, 7000));
        for (int c = 0; c < 1000; ++c) {
            const int deg = 3 + static_cast<int>(rng.below(2));
            std::vector<double> coeffs(deg + 1);
            for (auto& x : coeffs) x = rng.uniform(-1.0, 1.0);
            const PolyD p(std::move(coeffs));
            bool grid_found = false;
            double prev = p.eval(1e-6);
            for (int g = 1; g <= 1000000 && !grid_found; ++g) {
                const double t = g * 1e-6;
                const double v = p.eval(t >= 1.0 ? 1.0 - 1e-9 : t);
                if (prev == 0 || (prev < 0) != (v < 0)) grid_found = true;
                prev = v;
            }
            const bool sturm_found = roots_in_open_unit(p).has_value();
            suite.check(grid_found == sturm_found, "roots_in_open_unit disagrees with grid scan");
        }
    }

    return suite.finish();
}

SuiteResult run_dittert(long samples, std::uint64_t seed) {
    Suite suite("dittert");

    // phi_ij consistency at the conjectured maximizer
    for (int n : {3, 4, 5, 6}) {
        const MatD J = MatD::uniform(n);
        const auto rep = maximizer_conditions(J, 1e-12);
        suite.check(rep.support_consistent, "maximizer conditions fail at J_n");
        double worst = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) worst = std::max(worst, std::abs(rep.phi_ij(i, j) - rep.phi));
        suite.check(worst <= 1e-12, note("phi_ij spread at J_n", worst));
    }

    // the A_4 instance certifies non-maximality with (4,2), (3,3) flagged
    {
        PerturbParams<Rat> P;
        P.a = Rat(1);
        P.x = Rat(1, 2);
        P.y = Rat(1, 4);
        const MatQ A4 = normalize_to_kn(build_perturbation(Perturbation::A4, P));
        const auto rep = maximizer_conditions(A4, Rat(0));
        suite.check(!rep.support_consistent, "A_4 instance unexpectedly passes maximizer conditions");
        bool has42 = false, has33 = false;
        for (const auto& [i, j] : rep.violating_pairs) {
            if (i == 3 && j == 1) has42 = true;
            if (i == 2 && j == 2) has33 = true;
        }
        suite.check(has42 && has33, "A_4 violating pairs do not include (4,2) and (3,3)");
    }

    // sum-vector preservation across the section-3 constructions, exact
    {
        Rng rng(mix_seed(seed, 8000));
        for (int c = 0; c < 50; ++c) {
            PerturbParams<Rat> P;
            P.a = Rat(1 + rng.below(8), 1 + rng.below(4));
            P.y = Rat(1 + rng.below(8), 1 + rng.below(4));
            P.b = Rat(1 + rng.below(8), 1 + rng.below(4));
            P.x = P.y * Rat(1 + rng.below(7), 8); // x < y
            P.epsilon = Rat(1, 1000);
            P.z = P.b + Rat(1); // keep Ahat entries nonnegative
            const auto a3 = build_perturbation(Perturbation::A3, P);
            const auto a5 = build_perturbation(Perturbation::A5, P);
            const auto a6 = build_perturbation(Perturbation::A6, P);
            const auto s3 = sum_vectors(a3), s5 = sum_vectors(a5), s6 = sum_vectors(a6);
            suite.check(s3.rows == s5.rows && s3.cols == s5.cols, "A_5 does not preserve the sum vectors of A_3");
            suite.check(s5.rows == s6.rows && s5.cols == s6.cols, "A_6 does not preserve the sum vectors of A_5");
            suite.check(a6 == average_lines(a5, Axis::col, 2, 3), "A_6 != column average of A_5");
            const auto at = build_perturbation(Perturbation::Atilde, P);
            const auto ate = build_perturbation(Perturbation::AtildeEps, P);
            const auto st = sum_vectors(at), ste = sum_vectors(ate);
            suite.check(st.rows == ste.rows && st.cols == ste.cols, "Atilde_eps does not preserve the sum vectors");

            // strict permanent drops
            suite.check(per_ryser(a6) < per_ryser(a5), "per(A_6) not strictly below per(A_5)");
            const auto ahat = build_perturbation(Perturbation::Ahat, P);
            suite.check(per_ryser(ahat) < P.a * P.x * P.y * P.z, "per(Ahat) not strictly below a*x*y*z");

            // all residual identities vanish exactly
            for (const auto& res : perturbation_identities(P)) {
                if (res.name == "Ateps_slope_second_diff") continue;
                if (res.name.rfind("Ateps_slope_residual", 0) == 0) continue;
                suite.check(res.value == Rat(0), "nonzero exact residual: " + res.name);
            }
            // slope residual equals the second difference times epsilon, exactly
            const auto ids = perturbation_identities(P);
            Rat r1, c2;
            for (const auto& res : ids) {
                if (res.name == "Ateps_slope_residual_eps1") r1 = res.value;
                if (res.name == "Ateps_slope_second_diff") c2 = res.value;
            }
            suite.check(r1 == c2 * P.epsilon, "Atilde_eps slope residual is not first order in epsilon");

            // x >= y branch
            PerturbParams<Rat> Q = P;
            Q.x = P.y * Rat(1 + rng.below(8), 4) + P.y; // x >= y
            for (const auto& res : perturbation_identities(Q))
                if (res.name == "per(A4)-per(A3)") suite.check(res.value == Rat(0), "per(A_4) != per(A_3)");
        }
    }

    // sampled conjecture support on K_4
    for (long c = 0; c < samples; ++c) {
        const MatD X = random_kn(4, mix_seed(seed, 9000 + static_cast<std::uint64_t>(c)));
        const double d = phi_vs_jn(X);
        suite.check(d >= -1e-12, note("phi(J_4) - phi(X) negative", d), &X);
    }

    return suite.finish();
}

std::vector<SuiteResult> run_suite(const std::string& name, long samples, std::uint64_t seed) {
    std::vector<SuiteResult> out;
    if (name == "symf4" || name == "all") out.push_back(run_symf4(samples, seed));
    if (name == "lihwang4" || name == "all") out.push_back(run_lihwang4(samples, seed));
    if (name == "lihwang6" || name == "all") out.push_back(run_lihwang6(samples, seed));
    if (name == "dittert" || name == "all") out.push_back(run_dittert(samples, seed));
    if (out.empty()) throw DomainError("unknown suite: " + name + " (want symf4|lihwang4|lihwang6|dittert|all)");
    return out;
}

} // namespace permlab::verify
