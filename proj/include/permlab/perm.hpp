#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "permlab/matcore.hpp"
#include "permlab/matrix.hpp"

namespace permlab {

// Reference permanent: direct sum over all n! permutations. Kept as the
// slow oracle the faster routes are checked against.
template <class T>
T per_naive(const Matrix<T>& A) {
    const int n = A.n();
    if (n > kMaxOrder) throw DomainError("per_naive: n <= 8 only");
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    T total(0);
    do {
        T prod(1);
        for (int i = 0; i < n; ++i) {
            prod *= A(i, p[i]);
            if (prod == T(0)) break;
        }
        total += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

// Ryser inclusion-exclusion with Gray-code column updates, O(2^n * n).
template <class T>
T per_ryser(const Matrix<T>& A) {
    const int n = A.n();
    if (n == 0) return T(1);
    if (n > 30) throw DomainError("per_ryser: n <= 30 only");
    std::vector<T> rowsum(n, T(0));
    T total(0);
    std::uint64_t gray = 0;
    const std::uint64_t end = std::uint64_t(1) << n;
    for (std::uint64_t k = 1; k < end; ++k) {
        const std::uint64_t next = k ^ (k >> 1);
        const std::uint64_t diff = gray ^ next;
        const int j = std::countr_zero(diff);
        if (next & diff)
            for (int i = 0; i < n; ++i) rowsum[i] += A(i, j);
        else
            for (int i = 0; i < n; ++i) rowsum[i] -= A(i, j);
        T prod(1);
        for (int i = 0; i < n; ++i) {
            prod *= rowsum[i];
            if (prod == T(0)) break;
        }
        if ((n - std::popcount(next)) & 1)
            total -= prod;
        else
            total += prod;
        gray = next;
    }
    return total;
}

// permanent of A with row i and column j deleted
template <class T>
T per_minor(const Matrix<T>& A, int i, int j) {
    if (i < 0 || j < 0 || i >= A.n() || j >= A.n()) throw DomainError("per_minor: index out of range");
    if (A.n() == 1) return T(1);
    return per_ryser(A.minor_matrix(i, j));
}

// permanent of the submatrix on the given rows/cols; empty index sets
// give 1 (the k=0 / k=n boundary convention of the mixed expansion)
template <class T>
T per_keep(const Matrix<T>& A, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.empty()) return T(1);
    return per_ryser(A.keep(rows, cols));
}

// k-th subpermanent sum: sum of permanents of all k x k submatrices,
// by direct enumeration of the C(n,k)^2 minors. sigma_0 = 1.
template <class T>
T sigma_k(const Matrix<T>& A, int k) {
    const int n = A.n();
    if (k == 0) return T(1);
    if (k < 0 || k > n) throw DomainError("sigma_k: need 0 <= k <= n");
    const auto idx = subsets(n, k);
    T total(0);
    for (const auto& rows : idx)
        for (const auto& cols : idx) total += per_ryser(A.keep(rows, cols));
    return total;
}

// Laplace-type expansion along the rows indexed by alpha:
//   per(A) = sum over col subsets beta of per(A[alpha/beta]) per(A(alpha/beta))
template <class T>
T laplace_expand(const Matrix<T>& A, const std::vector<int>& alpha) {
    const int n = A.n();
    const int k = static_cast<int>(alpha.size());
    if (k < 1 || k > n) throw DomainError("laplace_expand: need 1 <= |alpha| <= n");
    for (int i = 0; i < k; ++i)
        if (alpha[i] < 0 || alpha[i] >= n || (i > 0 && alpha[i] <= alpha[i - 1]))
            throw DomainError("laplace_expand: alpha must be strictly increasing within 0..n-1");
    const auto rows_rest = complement_of(alpha, n);
    T total(0);
    for (const auto& beta : subsets(n, k)) {
        const T inner = per_keep(A, alpha, beta);
        if (inner == T(0)) continue;
        total += inner * per_keep(A, rows_rest, complement_of(beta, n));
    }
    return total;
}

// S_k(A,B) = sum over alpha,beta of per(A[alpha/beta]) per(B(alpha/beta));
// satisfies per(A+B) = sum_k S_k(A,B)
template <class T>
T s_k_mixed(const Matrix<T>& A, const Matrix<T>& B, int k) {
    const int n = A.n();
    if (B.n() != n) throw DomainError("s_k_mixed: orders differ");
    if (k < 0 || k > n) throw DomainError("s_k_mixed: need 0 <= k <= n");
    if (k == 0) return per_ryser(B);
    if (k == n) return per_ryser(A);
    const auto idx = subsets(n, k);
    T total(0);
    for (const auto& alpha : idx) {
        const auto rows_rest = complement_of(alpha, n);
        for (const auto& beta : idx) {
            const T inner = per_keep(A, alpha, beta);
            if (inner == T(0)) continue;
            total += inner * per_keep(B, rows_rest, complement_of(beta, n));
        }
    }
    return total;
}

// per(tJ_n + (1-t)A) through the subpermanent expansion
//   sum_k t^k (1-t)^(n-k) k!/n^k sigma_{n-k}(A).
// The k x k submatrices of tJ_n all have permanent t^k k!/n^k, which
// collapses the mixed expansion to one sigma term per k.
template <class T>
T per_convex_j(const Matrix<T>& A, const T& t) {
    const int n = A.n();
    if (!is_doubly_stochastic(A, mode_tol<T>(1e-9)))
        throw DomainError("per_convex_j: matrix is not doubly stochastic");
    std::vector<T> sig(n + 1);
    for (int k = 0; k <= n; ++k) sig[k] = sigma_k(A, k);
    const T one_minus = T(1) - t;
    T total(0);
    T npow(1); // n^k
    T tpow(1); // t^k
    for (int k = 0; k <= n; ++k) {
        T term = tpow * (T(factorial(k)) / npow) * sig[n - k];
        for (int j = 0; j < n - k; ++j) term *= one_minus;
        total += term;
        npow *= T(n);
        tpow *= t;
    }
    return total;
}

} // namespace permlab
