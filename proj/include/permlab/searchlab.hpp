#pragma once

#include <cstdint>
#include <vector>

#include "permlab/matrix.hpp"

namespace permlab::search {

enum class Domain { omega4_quartic_paper, omega4_gap_true, k4_phi };

struct SearchConfig {
    int restarts = 50;
    long max_evals = 60000; // per restart
    std::uint64_t seed = 0;
    Domain domain = Domain::omega4_gap_true;
    double lo = 0.5, hi = 1.0; // alpha interval where applicable
    double tol_x = 1e-10;
    double tol_f = 1e-13;
    int threads = 0;           // 0: hardware concurrency
    bool record_trace = false; // per-restart (eval, best value) pairs
};

struct SearchResult {
    double best_value = 0;
    double best_alpha = -1; // -1 when the domain has no alpha
    MatD best_matrix;
    long evals_used = 0;
    std::vector<double> per_restart_values;
    std::vector<MatD> per_restart_matrices;
    int best_restart = -1;
    bool budget_exhausted = false; // no restart converged within max_evals
    std::vector<std::vector<std::pair<long, double>>> traces;
};

// Minimizes the printed quartic evaluated at alpha over Omega_4
// (weights over the 24 permutation matrices) x [lo, hi].
SearchResult minimize_quartic_paper(const SearchConfig& cfg);

// Minimizes 32 * gap_direct(A, alpha) over the same domain.
SearchResult minimize_gap_true(const SearchConfig& cfg);

// Maximizes phi over K_4 (16 positive entries scaled to sum 4).
// best_value is the maximum found.
SearchResult maximize_phi_k4(const SearchConfig& cfg);

// distance of the result matrix to J_n in max norm
double max_norm_to_uniform(const MatD& A);

} // namespace permlab::search
