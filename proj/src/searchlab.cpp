#include "permlab/searchlab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "permlab/dittert.hpp"
#include "permlab/lihwang.hpp"
#include "permlab/matcore.hpp"
#include "permlab/perm.hpp"
#include "permlab/rng.hpp"

namespace permlab::search {

namespace {

double softplus(double z) {
    if (z > 30) return z;
    if (z < -30) return std::exp(z);
    return std::log1p(std::exp(z));
}

// logistic map of an unconstrained coordinate into [lo, hi]
double to_interval(double z, double lo, double hi) { return lo + (hi - lo) / (1.0 + std::exp(-z)); }

const std::vector<MatD>& perm_matrices4() {
    static const std::vector<MatD> mats = [] {
        std::vector<MatD> out;
        std::vector<int> p{0, 1, 2, 3};
        do {
            out.push_back(permutation_matrix(p));
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return mats;
}

MatD omega4_from_weights(const double* z) {
    const auto& perms = perm_matrices4();
    double w[24], total = 0;
    for (int i = 0; i < 24; ++i) {
        w[i] = softplus(z[i]) + 1e-300;
        total += w[i];
    }
    MatD A(4);
    for (int i = 0; i < 24; ++i) {
        const double wi = w[i] / total;
        const MatD& P = perms[i];
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) A(r, c) += wi * P(r, c);
    }
    return A;
}

MatD k4_from_entries(const double* z) {
    double w[16], total = 0;
    for (int i = 0; i < 16; ++i) {
        w[i] = softplus(z[i]) + 1e-300;
        total += w[i];
    }
    MatD A(4);
    const double scale = 4.0 / total;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) A(i, j) = w[4 * i + j] * scale;
    return A;
}

struct NmOutcome {
    std::vector<double> x;
    double value = 0;
    long evals = 0;
    bool converged = false;
};

// Standard Nelder-Mead simplex with monotone incumbent tracking.
NmOutcome nelder_mead(const std::function<double(const std::vector<double>&)>& fn, std::vector<double> x0, double step,
                      double tol_x, double tol_f, long max_evals,
                      std::vector<std::pair<long, double>>* trace = nullptr) {
    const int d = static_cast<int>(x0.size());
    NmOutcome out;
    std::vector<std::vector<double>> xs(d + 1, x0);
    std::vector<double> fs(d + 1);
    for (int i = 1; i <= d; ++i) xs[i][i - 1] += step;
    for (int i = 0; i <= d; ++i) {
        fs[i] = fn(xs[i]);
        ++out.evals;
    }

    auto record = [&](double best) {
        if (trace) trace->emplace_back(out.evals, best);
    };

    std::vector<int> order(d + 1);
    while (out.evals < max_evals) {
        for (int i = 0; i <= d; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return fs[a] < fs[b]; });
        const int best = order[0], worst = order[d], second = order[d - 1];
        record(fs[best]);

        double spread_f = std::abs(fs[worst] - fs[best]);
        double spread_x = 0;
        for (int i = 0; i < d; ++i) spread_x = std::max(spread_x, std::abs(xs[worst][i] - xs[best][i]));
        if (spread_f <= tol_f && spread_x <= tol_x) {
            out.converged = true;
            break;
        }

        std::vector<double> centroid(d, 0.0);
        for (int i = 0; i <= d; ++i)
            if (i != worst)
                for (int k = 0; k < d; ++k) centroid[k] += xs[i][k];
        for (int k = 0; k < d; ++k) centroid[k] /= d;

        auto make_point = [&](double coef) {
            std::vector<double> p(d);
            for (int k = 0; k < d; ++k) p[k] = centroid[k] + coef * (xs[worst][k] - centroid[k]);
            return p;
        };

        auto xr = make_point(-1.0);
        const double fr = fn(xr);
        ++out.evals;
        if (fr < fs[order[0]]) {
            auto xe = make_point(-2.0);
            const double fe = fn(xe);
            ++out.evals;
            if (fe < fr) {
                xs[worst] = std::move(xe);
                fs[worst] = fe;
            } else {
                xs[worst] = std::move(xr);
                fs[worst] = fr;
            }
        } else if (fr < fs[second]) {
            xs[worst] = std::move(xr);
            fs[worst] = fr;
        } else {
            const bool outside = fr < fs[worst];
            auto xc = make_point(outside ? -0.5 : 0.5);
            const double fc = fn(xc);
            ++out.evals;
            if (fc < (outside ? fr : fs[worst])) {
                xs[worst] = std::move(xc);
                fs[worst] = fc;
            } else {
                // shrink toward the best vertex
                for (int i = 0; i <= d; ++i) {
                    if (i == order[0]) continue;
                    for (int k = 0; k < d; ++k) xs[i][k] = xs[order[0]][k] + 0.5 * (xs[i][k] - xs[order[0]][k]);
                    fs[i] = fn(xs[i]);
                    ++out.evals;
                }
            }
        }
    }

    int best = 0;
    for (int i = 1; i <= d; ++i)
        if (fs[i] < fs[best]) best = i;
    out.x = xs[best];
    out.value = fs[best];
    record(out.value);
    return out;
}

struct RestartOutcome {
    double value = 0;
    std::vector<double> x;
    long evals = 0;
    bool converged = false;
    std::vector<std::pair<long, double>> trace;
};

using StartFn = std::function<std::vector<double>(Rng&)>;

// One seeded restart: coarse Nelder-Mead followed by two shrinking
// polish stages around the incumbent.
RestartOutcome run_restart(const std::function<double(const std::vector<double>&)>& fn, std::uint64_t seed,
                           const StartFn& make_start, long max_evals, double tol_x, double tol_f, bool record_trace) {
    Rng rng(seed);
    std::vector<double> x0 = make_start(rng);

    RestartOutcome out;
    auto* trace = record_trace ? &out.trace : nullptr;
    auto stage1 = nelder_mead(fn, std::move(x0), 0.8, tol_x, tol_f, max_evals, trace);
    out.evals = stage1.evals;
    out.converged = stage1.converged;
    double best = stage1.value;
    std::vector<double> xbest = std::move(stage1.x);
    for (double polish_step : {1e-3, 1e-6}) {
        if (out.evals >= max_evals) break;
        auto s = nelder_mead(fn, xbest, polish_step, tol_x, tol_f, max_evals - out.evals, trace);
        out.evals += s.evals;
        if (s.value < best) {
            best = s.value;
            xbest = std::move(s.x);
        }
    }
    out.value = best;
    out.x = std::move(xbest);
    return out;
}

// interior start: mild jitter around the barycenter
StartFn interior_start(int dim) {
    return [dim](Rng& rng) {
        std::vector<double> x(dim);
        for (auto& v : x) v = rng.uniform(-0.7, 0.7);
        return x;
    };
}

// Styled starts for the Omega_4-weights x alpha domain, cycling through
// interior points, wide spreads, and low-dimensional faces (vertices and
// edge midpoints of the polytope, where softplus weights vanish). The
// gap minimizers sit on such faces, so face starts earn their slots.
StartFn omega4_start(int style) {
    return [style](Rng& rng) {
        std::vector<double> x(25);
        switch (style % 6) {
            case 0:
            case 1: {
                const double s = style % 6 == 0 ? 0.7 : 3.0;
                for (auto& v : x) v = rng.uniform(-s, s);
                break;
            }
            case 2: { // one dominant weight: near a vertex
                for (int i = 0; i < 24; ++i) x[i] = -8.0 + rng.uniform(-1.0, 1.0);
                x[rng.below(24)] = 2.0;
                break;
            }
            case 3: { // two dominant weights: near an edge midpoint
                for (int i = 0; i < 24; ++i) x[i] = -8.0 + rng.uniform(-1.0, 1.0);
                const auto i = rng.below(24);
                auto j = rng.below(24);
                while (j == i) j = rng.below(24);
                x[i] = 2.0;
                x[j] = 2.0;
                break;
            }
            case 4: { // three dominant weights
                for (int i = 0; i < 24; ++i) x[i] = -8.0 + rng.uniform(-1.0, 1.0);
                for (int k = 0; k < 3; ++k) x[rng.below(24)] = 2.0 + rng.uniform(-0.5, 0.5);
                break;
            }
            default: { // wide spread, deep into the faces
                for (auto& v : x) v = rng.uniform(-10.0, 10.0);
                break;
            }
        }
        x[24] = rng.uniform(-1.5, 1.5); // alpha coordinate
        return x;
    };
}

// Runs restarts on a small thread pool. Each restart derives its own rng
// stream from (seed, index) and writes into its own slot, so results are
// bit-identical for any thread count.
SearchResult drive(const SearchConfig& cfg, const std::function<StartFn(int)>& start_for_restart,
                   const std::function<double(const std::vector<double>&)>& fn,
                   const std::function<MatD(const std::vector<double>&)>& to_matrix,
                   const std::function<void(SearchResult&, const std::vector<double>&)>& finish) {
    const int restarts = std::max(1, cfg.restarts);
    std::vector<RestartOutcome> slots(restarts);
    int nthreads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min(nthreads, restarts));

    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int r = next.fetch_add(1);
            if (r >= restarts) return;
            slots[r] = run_restart(fn, mix_seed(cfg.seed, static_cast<std::uint64_t>(r)), start_for_restart(r),
                                   cfg.max_evals, cfg.tol_x, cfg.tol_f, cfg.record_trace);
        }
    };
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SearchResult res;
    res.per_restart_values.reserve(restarts);
    bool any_converged = false;
    for (int r = 0; r < restarts; ++r) {
        res.per_restart_values.push_back(slots[r].value);
        res.per_restart_matrices.push_back(to_matrix(slots[r].x));
        res.evals_used += slots[r].evals;
        any_converged = any_converged || slots[r].converged;
        if (res.best_restart < 0 || slots[r].value < res.per_restart_values[res.best_restart]) res.best_restart = r;
        if (cfg.record_trace) res.traces.push_back(std::move(slots[r].trace));
    }
    res.best_value = res.per_restart_values[res.best_restart];
    res.budget_exhausted = !any_converged;
    finish(res, slots[res.best_restart].x);
    return res;
}

} // namespace

SearchResult minimize_quartic_paper(const SearchConfig& cfg) {
    const double lo = cfg.lo, hi = cfg.hi;
    auto fn = [lo, hi](const std::vector<double>& z) {
        const MatD A = omega4_from_weights(z.data());
        const double alpha = to_interval(z[24], lo, hi);
        return to_double(quartic_paper(A).eval(alpha));
    };
    auto to_mat = [](const std::vector<double>& x) { return omega4_from_weights(x.data()); };
    return drive(cfg, omega4_start, fn, to_mat, [lo, hi](SearchResult& res, const std::vector<double>& x) {
        res.best_matrix = omega4_from_weights(x.data());
        res.best_alpha = to_interval(x[24], lo, hi);
    });
}

SearchResult minimize_gap_true(const SearchConfig& cfg) {
    const double lo = cfg.lo, hi = cfg.hi;
    auto fn = [lo, hi](const std::vector<double>& z) {
        const MatD A = omega4_from_weights(z.data());
        const double alpha = to_interval(z[24], lo, hi);
        return 32.0 * gap_direct(A, alpha);
    };
    auto to_mat = [](const std::vector<double>& x) { return omega4_from_weights(x.data()); };
    return drive(cfg, omega4_start, fn, to_mat, [lo, hi](SearchResult& res, const std::vector<double>& x) {
        res.best_matrix = omega4_from_weights(x.data());
        res.best_alpha = to_interval(x[24], lo, hi);
    });
}

SearchResult maximize_phi_k4(const SearchConfig& cfg) {
    auto fn = [](const std::vector<double>& z) {
        const MatD A = k4_from_entries(z.data());
        return -detail::phi_raw(A);
    };
    auto to_mat = [](const std::vector<double>& x) { return k4_from_entries(x.data()); };
    auto starts = [](int) { return interior_start(16); };
    SearchResult res = drive(cfg, starts, fn, to_mat, [](SearchResult& r, const std::vector<double>& x) {
        r.best_matrix = k4_from_entries(x.data());
        r.best_alpha = -1;
    });
    res.best_value = -res.best_value;
    for (auto& v : res.per_restart_values) v = -v;
    return res;
}

double max_norm_to_uniform(const MatD& A) {
    const double u = 1.0 / A.n();
    double worst = 0;
    for (int i = 0; i < A.n(); ++i)
        for (int j = 0; j < A.n(); ++j) worst = std::max(worst, std::abs(A(i, j) - u));
    return worst;
}

} // namespace permlab::search
