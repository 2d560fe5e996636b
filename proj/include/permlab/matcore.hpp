#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "permlab/errors.hpp"
#include "permlab/matrix.hpp"
#include "permlab/rng.hpp"

namespace permlab {

inline constexpr int kMaxOrder = 8; // samplers and parsers stop here

template <class T>
struct SumVectors {
    std::vector<T> rows;
    std::vector<T> cols;
};

template <class T>
SumVectors<T> sum_vectors(const Matrix<T>& A) {
    const int n = A.n();
    SumVectors<T> s{std::vector<T>(n, T(0)), std::vector<T>(n, T(0))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            s.rows[i] += A(i, j);
            s.cols[j] += A(i, j);
        }
    return s;
}

template <class T>
bool is_doubly_stochastic(const Matrix<T>& A, const T& tol) {
    for (int i = 0; i < A.n(); ++i)
        for (int j = 0; j < A.n(); ++j)
            if (A(i, j) < -tol) return false;
    const auto s = sum_vectors(A);
    for (const auto& r : s.rows)
        if (scalar_abs(T(r - T(1))) > tol) return false;
    for (const auto& c : s.cols)
        if (scalar_abs(T(c - T(1))) > tol) return false;
    return true;
}

template <class T>
bool is_in_kn(const Matrix<T>& A, const T& tol) {
    for (int i = 0; i < A.n(); ++i)
        for (int j = 0; j < A.n(); ++j)
            if (A(i, j) < -tol) return false;
    return scalar_abs(T(A.entry_sum() - T(A.n()))) <= tol;
}

// --- index subsets -------------------------------------------------------

// all size-k subsets of {0,...,n-1} in lexicographic order
inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

inline std::vector<int> complement_of(const std::vector<int>& s, int n) {
    std::vector<int> out;
    out.reserve(n - s.size());
    std::size_t p = 0;
    for (int i = 0; i < n; ++i) {
        if (p < s.size() && s[p] == i)
            ++p;
        else
            out.push_back(i);
    }
    return out;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

// --- samplers ------------------------------------------------------------

// D1*A*D2-style balancing by alternating row and column normalization.
inline MatD sinkhorn_project(MatD A, double tol = 1e-12, int max_iters = 10000) {
    const int n = A.n();
    if (tol <= 0) throw DomainError("sinkhorn_project: tol must be positive");
    for (int it = 0; it < max_iters; ++it) {
        for (int i = 0; i < n; ++i) {
            double rs = 0;
            for (int j = 0; j < n; ++j) rs += A(i, j);
            if (rs == 0) throw ZeroLineError("sinkhorn_project: zero row sum");
            for (int j = 0; j < n; ++j) A(i, j) /= rs;
        }
        for (int j = 0; j < n; ++j) {
            double cs = 0;
            for (int i = 0; i < n; ++i) cs += A(i, j);
            if (cs == 0) throw ZeroLineError("sinkhorn_project: zero column sum");
            for (int i = 0; i < n; ++i) A(i, j) /= cs;
        }
        double worst = 0;
        const auto s = sum_vectors(A);
        for (const auto& v : s.rows) worst = std::max(worst, std::abs(v - 1.0));
        for (const auto& v : s.cols) worst = std::max(worst, std::abs(v - 1.0));
        if (worst <= tol) return A;
    }
    throw NonConvergence("sinkhorn_project: max_iters exceeded");
}

inline MatD permutation_matrix(const std::vector<int>& p) {
    MatD m(static_cast<int>(p.size()));
    for (int i = 0; i < m.n(); ++i) m(i, p[i]) = 1.0;
    return m;
}

struct BirkhoffSample {
    MatD matrix;
    std::vector<double> weights;
    std::vector<std::vector<int>> perms;
};

// convex combination of m uniformly random permutation matrices with a
// uniform random simplex weight vector
inline BirkhoffSample birkhoff_sample(int n, int m, std::uint64_t seed) {
    if (n < 2 || n > kMaxOrder) throw DomainError("birkhoff_sample: order out of range");
    if (m < 1) throw DomainError("birkhoff_sample: need m >= 1");
    Rng rng(seed);
    BirkhoffSample out;
    out.weights = m == 1 ? std::vector<double>{1.0} : rng.simplex_point(m);
    out.matrix = MatD(n);
    for (int t = 0; t < m; ++t) {
        auto p = rng.permutation(n);
        for (int i = 0; i < n; ++i) out.matrix(i, p[i]) += out.weights[t];
        out.perms.push_back(std::move(p));
    }
    return out;
}

inline MatD random_birkhoff(int n, int m, std::uint64_t seed) { return birkhoff_sample(n, m, seed).matrix; }

// i.i.d. nonnegative draws rescaled to entry sum n
inline MatD random_kn(int n, std::uint64_t seed) {
    if (n < 2 || n > kMaxOrder) throw DomainError("random_kn: order out of range");
    Rng rng(seed);
    MatD A(n);
    double total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            A(i, j) = rng.uniform01();
            total += A(i, j);
        }
    const double scale = n / total;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) *= scale;
    return A;
}

// rational Birkhoff point: integer weights normalized by their sum
inline MatQ random_birkhoff_exact(int n, int m, std::uint64_t seed) {
    if (n < 2 || n > kMaxOrder) throw DomainError("random_birkhoff_exact: order out of range");
    if (m < 1) throw DomainError("random_birkhoff_exact: need m >= 1");
    Rng rng(seed);
    std::vector<std::uint64_t> w(m);
    std::uint64_t total = 0;
    for (auto& wi : w) {
        wi = 1 + rng.below(1000);
        total += wi;
    }
    MatQ A(n);
    for (int t = 0; t < m; ++t) {
        const auto p = rng.permutation(n);
        const Rat wt = Rat(w[t], total);
        for (int i = 0; i < n; ++i) A(i, p[i]) += wt;
    }
    return A;
}

// generic rational matrix with entries num/den, num in [0, max_num]
inline MatQ random_rational_matrix(int n, std::uint64_t seed, int max_num = 9, int max_den = 6) {
    Rng rng(seed);
    MatQ A(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            A(i, j) = Rat(rng.below(static_cast<std::uint64_t>(max_num) + 1), 1 + rng.below(static_cast<std::uint64_t>(max_den)));
    return A;
}

// deterministic average of all n! permutation matrices; equals J_n
inline MatQ mean_of_all_permutations(int n) {
    MatQ A(n);
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    const Rat w = Rat(1) / Rat(factorial(n));
    do {
        for (int i = 0; i < n; ++i) A(i, p[i]) += w;
    } while (std::next_permutation(p.begin(), p.end()));
    return A;
}

// --- line surgery --------------------------------------------------------

enum class Axis { row, col };

// replaces lines s and t by their entrywise mean; entry sum is preserved
template <class T>
Matrix<T> average_lines(Matrix<T> A, Axis axis, int s, int t) {
    if (s == t) throw DomainError("average_lines: need two distinct lines");
    const int n = A.n();
    const T half = T(1) / T(2);
    for (int k = 0; k < n; ++k) {
        if (axis == Axis::row) {
            const T m = half * (A(s, k) + A(t, k));
            A(s, k) = m;
            A(t, k) = m;
        } else {
            const T m = half * (A(k, s) + A(k, t));
            A(k, s) = m;
            A(k, t) = m;
        }
    }
    return A;
}

// --- structure -----------------------------------------------------------

// true iff no s x t all-zero submatrix with s + t = n exists (exhaustive
// subset scan; exact at these orders)
template <class T>
bool is_fully_indecomposable(const Matrix<T>& A) {
    const int n = A.n();
    if (n > kMaxOrder) throw DomainError("is_fully_indecomposable: order out of range");
    if (n == 1) return !(A(0, 0) == T(0));
    for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        const int s = std::popcount(mask);
        int zero_cols = 0;
        for (int j = 0; j < n; ++j) {
            bool all_zero = true;
            for (int i = 0; i < n && all_zero; ++i)
                if ((mask >> i & 1u) && !(A(i, j) == T(0))) all_zero = false;
            if (all_zero) ++zero_cols;
        }
        if (zero_cols >= n - s) return false;
    }
    return true;
}

} // namespace permlab
