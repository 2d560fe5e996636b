#pragma once

#include <utility>
#include <vector>

#include "permlab/matcore.hpp"
#include "permlab/matrix.hpp"

namespace permlab {

// r-th elementary symmetric function via the product recurrence over
// (1 + x_i t); stable in float mode, exact in rational mode.
template <class T>
T elem_sym(const std::vector<T>& x, int r) {
    const int n = static_cast<int>(x.size());
    if (r < 0 || r > n) throw DomainError("elem_sym: need 0 <= r <= len(x)");
    if (r == 0) return T(1);
    std::vector<T> e(r + 1, T(0));
    e[0] = T(1);
    for (int i = 0; i < n; ++i) {
        const int top = std::min(r, i + 1);
        for (int k = top; k >= 1; --k) e[k] += x[i] * e[k - 1];
    }
    return e[r];
}

// T_r(A): all C(n,r) sums of r distinct columns, lexicographic subset order
template <class T>
struct ColFamily {
    int r = 0;
    std::vector<std::vector<T>> vectors;
};

template <class T>
ColFamily<T> t_family(const Matrix<T>& A, int r) {
    const int n = A.n();
    if (r < 1 || r > n) throw DomainError("t_family: need 1 <= r <= n");
    ColFamily<T> fam;
    fam.r = r;
    for (const auto& cols : subsets(n, r)) {
        std::vector<T> v(n, T(0));
        for (int j : cols)
            for (int i = 0; i < n; ++i) v[i] += A(i, j);
        fam.vectors.push_back(std::move(v));
    }
    return fam;
}

// Inclusion-exclusion permanent over the column families:
//   per A = sum_{T_n} e_n - sum_{T_{n-1}} e_n + ... + (-1)^{n-1} sum_{T_1} e_n
template <class T>
T per_incl_excl(const Matrix<T>& A) {
    const int n = A.n();
    if (n > kMaxOrder) throw DomainError("per_incl_excl: n <= 8 only");
    T total(0);
    for (int r = n; r >= 1; --r) {
        T level(0);
        for (const auto& v : t_family(A, r).vectors) level += elem_sym(v, n);
        if ((n - r) & 1)
            total -= level;
        else
            total += level;
    }
    return total;
}

namespace detail {

template <class T>
void require_omega4(const Matrix<T>& A, const char* who) {
    if (A.n() != 4 || !is_doubly_stochastic(A, T(1e-9)))
        throw DomainError(std::string(who) + ": matrix must be 4x4 doubly stochastic");
}

template <class T>
std::pair<T, T> em_identity_residuals_raw(const Matrix<T>& A) {
    T t1_e2(0);
    for (int i = 0; i < 4; ++i) t1_e2 += elem_sym(A.col(i), 2);
    T t2_e2(0), t2_e3(0);
    for (const auto& v : t_family(A, 2).vectors) {
        t2_e2 += elem_sym(v, 2);
        t2_e3 += elem_sym(v, 3);
    }
    return {t2_e2 - T(2) * t1_e2 - T(6), t2_e3 - T(2) * t1_e2};
}

} // namespace detail

// 4x4 permanent from column statistics (valid on Omega_4):
//   per B = -1/3 + 1/9 sum_{T_1}(-4e_2+9e_3-18e_4) + 1/18 sum_{T_2}(4e_2-9e_3+18e_4)
template <class T>
T em_permanent4(const Matrix<T>& B) {
    detail::require_omega4(B, "em_permanent4");
    T t1(0);
    for (int i = 0; i < 4; ++i) {
        const auto c = B.col(i);
        t1 += T(-4) * elem_sym(c, 2) + T(9) * elem_sym(c, 3) - T(18) * elem_sym(c, 4);
    }
    T t2(0);
    for (const auto& v : t_family(B, 2).vectors)
        t2 += T(4) * elem_sym(v, 2) - T(9) * elem_sym(v, 3) + T(18) * elem_sym(v, 4);
    return T(-1) / T(3) + t1 / T(9) + t2 / T(18);
}

// Residuals of the two Omega_4 column-family identities
//   sum_{T_2} e_2 = 2 sum_{T_1} e_2 + 6   and   sum_{T_2} e_3 = 2 sum_{T_1} e_2;
// both vanish exactly on doubly stochastic input.
template <class T>
std::pair<T, T> em_identities4(const Matrix<T>& A) {
    detail::require_omega4(A, "em_identities4");
    return detail::em_identity_residuals_raw(A);
}

} // namespace permlab
