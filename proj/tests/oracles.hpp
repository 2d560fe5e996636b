#pragma once

// Independent brute-force oracles used only by the tests. Everything
// here enumerates directly and stays off the code paths it checks.

#include <vector>

#include "permlab/matcore.hpp"
#include "permlab/matrix.hpp"
#include "permlab/perm.hpp"
#include "permlab/poly.hpp"

namespace oracles {

using permlab::Matrix;
using permlab::subsets;

// elementary symmetric function by explicit subset enumeration
template <class T>
T elem_sym_enum(const std::vector<T>& x, int r) {
    T total(0);
    for (const auto& s : subsets(static_cast<int>(x.size()), r)) {
        T prod(1);
        for (int i : s) prod *= x[i];
        total += prod;
    }
    if (r == 0) total = T(1);
    return total;
}

// subpermanent sum by enumeration over minors, permanents by per_naive
template <class T>
T sigma_enum(const Matrix<T>& A, int k) {
    if (k == 0) return T(1);
    const auto idx = subsets(A.n(), k);
    T total(0);
    for (const auto& rows : idx)
        for (const auto& cols : idx) total += permlab::per_naive(A.keep(rows, cols));
    return total;
}

namespace detail {

inline bool kuhn_augment(const std::vector<std::vector<int>>& adj, int u, std::vector<int>& match_col,
                         std::vector<bool>& used) {
    for (int v : adj[u]) {
        if (used[v]) continue;
        used[v] = true;
        if (match_col[v] < 0 || kuhn_augment(adj, match_col[v], match_col, used)) {
            match_col[v] = u;
            return true;
        }
    }
    return false;
}

// perfect matching on the positive-entry bipartite graph
template <class T>
bool has_positive_diagonal(const Matrix<T>& A) {
    const int n = A.n();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(A(i, j) == T(0))) adj[i].push_back(j);
    std::vector<int> match_col(n, -1);
    for (int i = 0; i < n; ++i) {
        std::vector<bool> used(n, false);
        if (!kuhn_augment(adj, i, match_col, used)) return false;
    }
    return true;
}

} // namespace detail

// A matrix is fully indecomposable iff every position lies on a positive
// diagonal, i.e. every minor pattern A(i|j) still has a perfect matching.
template <class T>
bool fully_indecomposable_matching(const Matrix<T>& A) {
    const int n = A.n();
    if (n == 1) return !(A(0, 0) == T(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!detail::has_positive_diagonal(A.minor_matrix(i, j))) return false;
    return true;
}

// dense sign scan for a root in (0,1)
inline bool grid_scan_root01(const permlab::PolyD& p, double step = 1e-6) {
    double prev = p.eval(step);
    if (prev == 0) return true;
    for (double t = 2 * step; t < 1.0; t += step) {
        const double v = p.eval(t);
        if (v == 0 || (prev < 0) != (v < 0)) return true;
        prev = v;
    }
    return false;
}

} // namespace oracles
