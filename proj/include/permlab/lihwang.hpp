#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permlab/matcore.hpp"
#include "permlab/perm.hpp"
#include "permlab/poly.hpp"
#include "permlab/roots.hpp"
#include "permlab/symf.hpp"

namespace permlab {

enum class GapMethod { direct, quartic_paper, quartic_corrected, f_factored };

struct GapReport {
    int n = 0;
    double parameter = 0; // alpha or t
    double gap = 0;
    MatD witness;
    GapMethod method = GapMethod::direct;
};

namespace detail {

template <class T>
void require_omega(const Matrix<T>& A, const char* who) {
    if (!is_doubly_stochastic(A, T(1e-9))) throw DomainError(std::string(who) + ": matrix is not doubly stochastic");
}

} // namespace detail

// Convexity gap of the permanent against the uniform matrix:
//   t per(J_n) + (1-t) per(A) - per(tJ_n + (1-t)A).
// Nonnegative on t in [1/2, 1] is the conjectured inequality.
// per(J_n) = n!/n^n
template <class T>
T per_uniform(int n) {
    std::uint64_t npow = 1;
    for (int i = 0; i < n; ++i) npow *= static_cast<std::uint64_t>(n);
    return T(factorial(n)) / T(npow);
}

template <class T>
T gap_direct(const Matrix<T>& A, const T& t) {
    detail::require_omega(A, "gap_direct");
    const T per_a = per_ryser(A);
    const T per_mix = per_ryser(convex_with_uniform(A, t));
    return t * per_uniform<T>(A.n()) + (T(1) - t) * per_a - per_mix;
}

// The 4th-degree polynomial in alpha exactly as printed, from the four
// column statistics S2 = sum_i e_2(a_i), S3, S4 and S24 = sum_{T_2} e_4.
// Kept verbatim, misprints included, so it can be compared against the
// corrected polynomial below; see quartic_corrected.
template <class T>
Poly<T> quartic_paper(const Matrix<T>& A) {
    detail::require_omega4(A, "quartic_paper");
    T s2(0), s3(0), s4(0);
    for (int i = 0; i < 4; ++i) {
        const auto c = A.col(i);
        s2 += elem_sym(c, 2);
        s3 += elem_sym(c, 3);
        s4 += elem_sym(c, 4);
    }
    T s24(0);
    for (const auto& v : t_family(A, 2).vectors) s24 += elem_sym(v, 4);
    std::vector<T> c(5);
    c[0] = T(128) / T(3);
    c[1] = T(67) - T(80) * s2 + T(80) * s3 - T(192) * s4 + T(96) * s24;
    c[2] = T(-120) + T(148) * s2 - T(144) * s3 + T(384) * s4 - T(192) * s24;
    c[3] = T(68) - T(88) * s2 + T(80) * s3 - T(256) * s4 + T(128) * s24;
    c[4] = T(-15) + T(24) * s2 - T(16) * s3 + T(64) * s4 - T(32) * s24;
    return Poly<T>(std::move(c));
}

// The exact degree-<=4 polynomial equal to
//   f(alpha) = 3 alpha + 32(1-alpha) per(A) - 32 per(alpha J_4 + (1-alpha) A),
// recovered by interpolating 32*gap_direct at five nodes. f(0) = f(1) = 0
// by construction and f vanishes identically at A = J_4, none of which
// hold for the printed coefficient set.
template <class T>
Poly<T> quartic_corrected(const Matrix<T>& A) {
    detail::require_omega4(A, "quartic_corrected");
    const std::vector<T> nodes{T(0), T(1) / T(4), T(1) / T(2), T(3) / T(4), T(1)};
    std::vector<T> values;
    values.reserve(nodes.size());
    for (const auto& x : nodes) values.push_back(T(32) * gap_direct(A, x));
    return Poly<T>::interpolate(nodes, values);
}

// Quartic factor F_A of the n=6 gap: gap_direct(A,t) = t(1-t) F_A(t),
//   F_A(t) = 5/324 (1+t+t^2+t^3-5t^4) + per A (5-10t+10t^2-5t^3+t^4)
//            - 1/6 (1-t)^4 s5 - 1/18 t(1-t)^3 s4 - 1/36 t^2(1-t)^2 s3
//            - 1/54 t^3(1-t) s2.
template <class T>
Poly<T> f6_poly(const Matrix<T>& A) {
    if (A.n() != 6) throw DomainError("f6_poly: order 6 required");
    detail::require_omega(A, "f6_poly");
    const T pa = per_ryser(A);
    const T s5 = sigma_k(A, 5), s4 = sigma_k(A, 4), s3 = sigma_k(A, 3), s2 = sigma_k(A, 2);
    const T w = T(5) / T(324);
    std::vector<T> c(5);
    c[0] = w + T(5) * pa - s5 / T(6);
    c[1] = w - T(10) * pa + T(4) * s5 / T(6) - s4 / T(18);
    c[2] = w + T(10) * pa - s5 + T(3) * s4 / T(18) - s3 / T(36);
    c[3] = w - T(5) * pa + T(4) * s5 / T(6) - T(3) * s4 / T(18) + T(2) * s3 / T(36) - s2 / T(54);
    c[4] = T(-25) / T(324) + pa - s5 / T(6) + s4 / T(18) - s3 / T(36) + s2 / T(54);
    return Poly<T>(std::move(c));
}

// sigma_2(A) = 1/2 sum a_ij^2 + 1/2 n(n-2)  on Omega_n
template <class T>
T sigma2_closed(const Matrix<T>& A) {
    detail::require_omega(A, "sigma2_closed");
    const int n = A.n();
    T sq(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sq += A(i, j) * A(i, j);
    return sq / T(2) + T(n * (n - 2)) / T(2);
}

// sigma_3(A) = 2/3 sum a^3 + 1/2 (n-4) sum a^2 + 1/6 n(n^2-6n+10)  on Omega_n
template <class T>
T sigma3_closed(const Matrix<T>& A) {
    detail::require_omega(A, "sigma3_closed");
    const int n = A.n();
    T sq(0), cu(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const T& a = A(i, j);
            sq += a * a;
            cu += a * a * a;
        }
    return T(2) * cu / T(3) + T(n - 4) * sq / T(2) + T(n * (n * n - 6 * n + 10)) / T(6);
}

// Root-free certificate polynomial in t:
//   sum_{r=2}^{k} r (k-r)!/n^(k-r) C(n-r,k-r)^2 sigma_r(A - J_n) t^(r-2).
// No root in (0,1) certifies sigma_k(A) >= (n-k+1)^2/(nk) sigma_{k-1}(A).
template <class T>
Poly<T> hypothesis_poly(const Matrix<T>& A, int k) {
    const int n = A.n();
    if (k < 2 || k > n) throw DomainError("hypothesis_poly: need 2 <= k <= n");
    const Matrix<T> D = A - Matrix<T>::uniform(n);
    std::vector<T> c(k - 1, T(0));
    for (int r = 2; r <= k; ++r) {
        T npow(1);
        for (int j = 0; j < k - r; ++j) npow *= T(n);
        const T coef = T(r) * T(factorial(k - r)) / npow * T(binomial(n - r, k - r)) * T(binomial(n - r, k - r));
        c[r - 2] = coef * sigma_k(D, r);
    }
    return Poly<T>(std::move(c));
}

// signed slack of sigma_k(A) - (n-k+1)^2/(kn) sigma_{k-1}(A); diagnostic
// only, the inequality is known to fail in general
template <class T>
T holens_dokovic_ratio(const Matrix<T>& A, int k) {
    const int n = A.n();
    if (k < 2 || k > n) throw DomainError("holens_dokovic_ratio: need 2 <= k <= n");
    detail::require_omega(A, "holens_dokovic_ratio");
    return sigma_k(A, k) - T((n - k + 1) * (n - k + 1)) / T(k * n) * sigma_k(A, k - 1);
}

// --- n=6 bound chain -----------------------------------------------------

struct Theorem22Hypothesis {
    std::optional<RootInterval> k5_root;
    std::optional<RootInterval> k6_root;
    bool holds() const { return !k5_root && !k6_root; }
};

template <class T>
Theorem22Hypothesis theorem22_hypothesis(const Matrix<T>& A) {
    if (A.n() != 6) throw DomainError("theorem22_hypothesis: order 6 required");
    Theorem22Hypothesis h;
    if constexpr (is_exact_v<T>) {
        h.k5_root = roots_in_open_unit(hypothesis_poly(A, 5));
        h.k6_root = roots_in_open_unit(hypothesis_poly(A, 6));
    } else {
        h.k5_root = roots_in_open_unit(poly_to_exact(hypothesis_poly(A, 5)));
        h.k6_root = roots_in_open_unit(poly_to_exact(hypothesis_poly(A, 6)));
    }
    return h;
}

// Successive lower bounds of F_A(t) along the n=6 proof chain. Entries:
//   [0] F_A(t)
//   [1] after per A >= sigma_5/36
//   [2] after sigma_5 >= (2/15) sigma_4
//   [3] same value, sigma_4 terms collected
//   [4] after sigma_4 >= (3/8) sigma_3
//   [5] same value via the sigma_2/sigma_3 closed forms
//   [6] after the row inequality (sum_j a_ij^2)^2 <= sum_j a_ij^3
//   [7] all rows forced to the minimum row weight 1/6; identically zero.
// Requires both certificate polynomials to be root-free on (0,1).
template <class T>
std::vector<T> bound_chain_check6(const Matrix<T>& A, const T& t) {
    if (A.n() != 6) throw DomainError("bound_chain_check6: order 6 required");
    detail::require_omega(A, "bound_chain_check6");
    const auto hyp = theorem22_hypothesis(A);
    if (!hyp.holds()) throw HypothesisFailed("bound_chain_check6: certificate polynomial has a root in (0,1)");

    const T s5 = sigma_k(A, 5), s4 = sigma_k(A, 4), s3 = sigma_k(A, 3), s2 = sigma_k(A, 2);
    T sq(0), cu(0);            // entry power sums
    std::vector<T> xrow(6, T(0)); // per-row sums of squares
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            const T& a = A(i, j);
            xrow[i] += a * a;
            sq += a * a;
            cu += a * a * a;
        }

    const T one = T(1);
    const T u = one - t;
    const T q_poly = one + t + t * t + t * t * t - T(5) * t * t * t * t;
    const T p1 = T(-1) + T(14) * t - T(26) * t * t + T(19) * t * t * t - T(5) * t * t * t * t;
    const T p2 = T(-1) - t + T(19) * t * t - T(26) * t * t * t + T(10) * t * t * t * t;
    const T p3 = T(-3) - T(3) * t - T(3) * t * t + T(42) * t * t * t - T(30) * t * t * t * t;
    const T p4 = T(-3) - T(3) * t - T(3) * t * t + T(22) * t * t * t - T(10) * t * t * t * t;
    const T r_poly = one + t + t * t - T(8) * t * t * t + T(4) * t * t * t * t;

    const T tail43 = t * u * u * u * s4 / T(18) + t * t * u * u * s3 / T(36);
    const T tail2 = t * t * t * u * s2 / T(54);
    const T qterm = T(5) * q_poly / T(324);

    std::vector<T> chain;
    chain.push_back(f6_poly(A).eval(t));
    chain.push_back(p1 * s5 / T(36) - tail43 - tail2 + qterm);
    chain.push_back(p1 * s4 / T(270) - tail43 - tail2 + qterm);
    chain.push_back(p2 * s4 / T(270) - t * t * u * u * s3 / T(36) - tail2 + qterm);
    chain.push_back(T(3) * p2 * s3 / T(2160) - t * t * u * u * s3 / T(36) - tail2 + qterm);
    chain.push_back(p3 * (T(2) * cu / T(3) + sq + T(10)) / T(2160) - t * t * t * u * (sq / T(2) + T(12)) / T(54) + T(5) * q_poly / T(324));
    T rows_bound(0);
    for (const auto& x : xrow) rows_bound += p3 * x * x / T(3240) + p4 * x / T(2160);
    chain.push_back(rows_bound + r_poly / T(648));
    const T x_min = one / T(6);
    chain.push_back(T(6) * (p3 * x_min * x_min / T(3240) + p4 * x_min / T(2160)) + r_poly / T(648));
    return chain;
}

// The closing identity of the n=6 chain,
//   6(-1/3888 - t/3888 - t^2/3888 + t^3/486 - t^4/972)
//     + 1/648 (1 + t + t^2 - 8t^3 + 4t^4),
// assembled from the two displayed pieces; must be the zero polynomial.
inline PolyQ terminal_zero_identity() {
    const PolyQ f16(std::vector<Rat>{Rat(-1, 3888), Rat(-1, 3888), Rat(-1, 3888), Rat(1, 486), Rat(-1, 972)});
    const PolyQ r(std::vector<Rat>{Rat(1, 648), Rat(1, 648), Rat(1, 648), Rat(-8, 648), Rat(4, 648)});
    return Rat(6) * f16 + r;
}

} // namespace permlab
