#pragma once

#include <string>
#include <utility>
#include <vector>

#include "permlab/lihwang.hpp"
#include "permlab/matcore.hpp"
#include "permlab/perm.hpp"

namespace permlab {

namespace detail {

template <class T>
void require_kn(const Matrix<T>& X, const char* who) {
    if (!is_in_kn(X, T(1e-9))) throw DomainError(std::string(who) + ": matrix is not in K_n (entry sum != n)");
}

// phi without the K_n membership check; the section-3 identities are
// homogeneous and are evaluated on unnormalized patterns
template <class T>
T phi_raw(const Matrix<T>& X) {
    const auto s = sum_vectors(X);
    T pr(1), pc(1);
    for (const auto& r : s.rows) pr *= r;
    for (const auto& c : s.cols) pc *= c;
    return pr + pc - per_ryser(X);
}

template <class T>
T phi_ij_raw(const Matrix<T>& X, int i, int j) {
    const auto s = sum_vectors(X);
    T pr(1), pc(1);
    for (int k = 0; k < X.n(); ++k) {
        if (k != i) pr *= s.rows[k];
        if (k != j) pc *= s.cols[k];
    }
    return pr + pc - per_minor(X, i, j);
}

} // namespace detail

// phi(X) = prod r_i + prod c_j - per X  on K_n
template <class T>
T phi(const Matrix<T>& X) {
    detail::require_kn(X, "phi");
    return detail::phi_raw(X);
}

// phi_ij(X) = prod_{k!=i} r_k + prod_{l!=j} c_l - per X(i|j)
template <class T>
T phi_ij(const Matrix<T>& X, int i, int j) {
    detail::require_kn(X, "phi_ij");
    if (i < 0 || j < 0 || i >= X.n() || j >= X.n()) throw DomainError("phi_ij: index out of range");
    return detail::phi_ij_raw(X, i, j);
}

// phi(J_n) - phi(X); nonnegativity is the conjecture's prediction
template <class T>
T phi_vs_jn(const Matrix<T>& X) {
    detail::require_kn(X, "phi_vs_jn");
    const T phi_j = T(2) - per_uniform<T>(X.n());
    return phi_j - detail::phi_raw(X);
}

template <class T>
struct PhiReport {
    T phi{};
    Matrix<T> phi_ij;
    bool support_consistent = false;
    std::vector<std::pair<int, int>> violating_pairs; // 0-based positions
};

// Necessary first-order conditions at a phi-maximizer: all phi_ij over
// positive entries agree with phi(X), and phi_ij <= phi(X) over zero
// entries. A false result certifies X is not a maximizer; true is
// necessary, not sufficient.
template <class T>
PhiReport<T> maximizer_conditions(const Matrix<T>& X, const T& tol) {
    detail::require_kn(X, "maximizer_conditions");
    const int n = X.n();
    PhiReport<T> rep;
    rep.phi = detail::phi_raw(X);
    rep.phi_ij = Matrix<T>(n);
    const T positive_cut = is_exact_v<T> ? T(0) : T(1e-12);

    bool ok = true;
    T pos_min{}, pos_max{};
    bool have_pos = false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const T v = detail::phi_ij_raw(X, i, j);
            rep.phi_ij(i, j) = v;
            if (X(i, j) > positive_cut) {
                if (!have_pos) {
                    pos_min = pos_max = v;
                    have_pos = true;
                } else {
                    if (v < pos_min) pos_min = v;
                    if (v > pos_max) pos_max = v;
                }
                if (scalar_abs(T(v - rep.phi)) > tol) {
                    ok = false;
                    rep.violating_pairs.emplace_back(i, j);
                }
            } else if (v > rep.phi + tol) {
                ok = false;
                rep.violating_pairs.emplace_back(i, j);
            }
        }
    if (have_pos && pos_max - pos_min > tol) ok = false;
    rep.support_consistent = ok;
    return rep;
}

// --- the perturbation family ----------------------------------------------

enum class Perturbation { A1, A2, A3, A4, A5, A6, Atilde, AtildeEps, Ahat };

// Named positive entries of the perturbation patterns plus the epsilon
// of the two perturbed variants. Only the fields a pattern uses are read.
template <class T>
struct PerturbParams {
    T a{1}, b{1}, x{1}, y{1}, z{1}, l{1}, m{1}, v{1}, p{1}, q{1}, r{1}, s{1}, t{1};
    T epsilon{0};
};

template <class T>
Matrix<T> build_perturbation(Perturbation which, const PerturbParams<T>& P) {
    const T zero(0);
    auto positive = [](std::initializer_list<T> vals) {
        for (const auto& v : vals)
            if (!(v > T(0))) return false;
        return true;
    };
    switch (which) {
        case Perturbation::A1:
            if (!positive({P.a, P.x, P.y, P.z, P.t, P.p, P.q, P.r, P.s}))
                throw DomainError("A1: parameters must be positive");
            return Matrix<T>::from_rows({{P.a, zero, zero, zero}, {P.x, P.y, P.z, P.t}, {P.x, P.y, P.z, P.t}, {P.p, P.q, P.r, P.s}});
        case Perturbation::A2:
            if (!positive({P.a, P.x, P.y, P.p, P.q})) throw DomainError("A2: parameters must be positive");
            return Matrix<T>::from_rows({{P.a, zero, zero, zero}, {P.x, P.y, P.y, P.y}, {P.x, P.y, P.y, P.y}, {P.p, P.q, P.q, P.q}});
        case Perturbation::A3:
            if (!positive({P.a, P.x, P.y})) throw DomainError("A3: parameters must be positive");
            return Matrix<T>::from_rows({{P.a, zero, zero, zero}, {P.x, P.y, P.y, P.y}, {P.x, P.y, P.y, P.y}, {P.x, P.y, P.y, P.y}});
        case Perturbation::A4:
            if (!positive({P.a, P.x, P.y})) throw DomainError("A4: parameters must be positive");
            if (P.x < P.y) throw DomainError("A4: requires x >= y");
            return Matrix<T>::from_rows(
                {{P.a, zero, zero, zero}, {P.x, P.y, P.y, P.y}, {P.x + P.y, zero, P.y, P.y}, {P.x - P.y, T(2) * P.y, P.y, P.y}});
        case Perturbation::A5:
            if (!positive({P.a, P.x, P.y})) throw DomainError("A5: parameters must be positive");
            if (!(P.x < P.y)) throw DomainError("A5: requires x < y");
            return Matrix<T>::from_rows(
                {{P.a, zero, zero, zero}, {P.x, P.y, P.y, P.y}, {T(2) * P.x, P.y, P.y, P.y - P.x}, {zero, P.y, P.y, P.y + P.x}});
        case Perturbation::A6: {
            if (!positive({P.a, P.x, P.y})) throw DomainError("A6: parameters must be positive");
            if (!(P.x < P.y)) throw DomainError("A6: requires x < y");
            const T half_x = P.x / T(2);
            return Matrix<T>::from_rows({{P.a, zero, zero, zero},
                                         {P.x, P.y, P.y, P.y},
                                         {T(2) * P.x, P.y, P.y - half_x, P.y - half_x},
                                         {zero, P.y, P.y + half_x, P.y + half_x}});
        }
        case Perturbation::Atilde:
            if (!positive({P.a, P.b, P.x, P.y})) throw DomainError("Atilde: parameters must be positive");
            return Matrix<T>::from_rows({{P.a, zero, zero, zero}, {P.b, P.x, P.x, P.x}, {zero, P.y, P.y, P.y}, {zero, P.y, P.y, P.y}});
        case Perturbation::AtildeEps: {
            if (!positive({P.a, P.b, P.x, P.y})) throw DomainError("AtildeEps: parameters must be positive");
            const T& e = P.epsilon;
            if (e < T(0) || P.a - e < T(0) || P.x - e < T(0)) throw DomainError("AtildeEps: epsilon too large");
            return Matrix<T>::from_rows(
                {{P.a - e, e, zero, zero}, {P.b + e, P.x - e, P.x, P.x}, {zero, P.y, P.y, P.y}, {zero, P.y, P.y, P.y}});
        }
        case Perturbation::Ahat: {
            if (!positive({P.a, P.b, P.x, P.y, P.z, P.l, P.m, P.v})) throw DomainError("Ahat: parameters must be positive");
            const T& e = P.epsilon;
            if (e < T(0) || P.b - e < T(0) || P.z - e < T(0)) throw DomainError("Ahat: epsilon too large");
            return Matrix<T>::from_rows(
                {{P.a, zero, zero, zero}, {P.b - e, P.x, P.l, P.m + e}, {zero, zero, P.y, P.v}, {e, zero, zero, P.z - e}});
        }
    }
    throw DomainError("build_perturbation: unknown pattern");
}

// rescale to K_n (entry sum n)
template <class T>
Matrix<T> normalize_to_kn(const Matrix<T>& A) {
    const T s = A.entry_sum();
    if (!(s > T(0))) throw DomainError("normalize_to_kn: entry sum must be positive");
    return (T(A.n()) / s) * A;
}

template <class T>
struct IdentityResidual {
    std::string name;
    T value{};
};

// Residuals of the stated permanent and phi identities of the
// perturbation family, all zero when the identities hold. The slope
// entries check per(Atilde_eps) against the stated first-order decrease
// -(32/3) x y^2 under the constraint 3a = 3b + 7x (the a used for those
// two entries is derived from b and x); the final entry is the second
// difference, the exact slope-error-per-epsilon constant.
template <class T>
std::vector<IdentityResidual<T>> perturbation_identities(const PerturbParams<T>& P) {
    std::vector<IdentityResidual<T>> out;
    const Matrix<T> a3 = build_perturbation(Perturbation::A3, P);
    const T per_a3 = per_ryser(a3);

    if (!(P.x < P.y)) {
        const T per_a4 = per_ryser(build_perturbation(Perturbation::A4, P));
        out.push_back({"per(A4)-per(A3)", per_a4 - per_a3});
    } else {
        const T per_a5 = per_ryser(build_perturbation(Perturbation::A5, P));
        const T per_a6 = per_ryser(build_perturbation(Perturbation::A6, P));
        const T y3 = P.y * P.y * P.y;
        out.push_back({"per(A5)-per(A3)", per_a5 - per_a3});
        out.push_back({"per(A5)-6ay^3", per_a5 - T(6) * P.a * y3});
        out.push_back({"per(A6)-a(6y^3-x^2y/2)", per_a6 - P.a * (T(6) * y3 - P.x * P.x * P.y / T(2))});
    }

    {
        const Matrix<T> at = build_perturbation(Perturbation::Atilde, P);
        const T lhs = detail::phi_ij_raw(at, 0, 0) - detail::phi_ij_raw(at, 1, 0);
        const T rhs = T(3) * P.y * P.y * (T(3) * P.b - T(3) * P.a + T(7) * P.x);
        out.push_back({"phi11(At)-phi21(At)-3y^2(3b-3a+7x)", lhs - rhs});
    }

    {
        const T per_ahat = per_ryser(build_perturbation(Perturbation::Ahat, P));
        out.push_back({"per(Ahat)-axy(z-eps)", per_ahat - P.a * P.x * P.y * (P.z - P.epsilon)});
    }

    // slope of per(Atilde_eps) in epsilon under 3a = 3b + 7x
    {
        PerturbParams<T> C = P;
        C.a = P.b + T(7) * P.x / T(3);
        const T target = T(-32) * P.x * P.y * P.y / T(3);
        const T per_at = per_ryser(build_perturbation(Perturbation::Atilde, C));
        const T eps1 = P.epsilon > T(0) ? P.epsilon : T(1) / T(1000);
        const T eps2 = eps1 / T(2);
        auto slope = [&](const T& e) {
            PerturbParams<T> Ce = C;
            Ce.epsilon = e;
            return (per_ryser(build_perturbation(Perturbation::AtildeEps, Ce)) - per_at) / e;
        };
        const T s1 = slope(eps1), s2 = slope(eps2);
        out.push_back({"Ateps_slope_residual_eps1", s1 - target});
        out.push_back({"Ateps_slope_residual_eps2", s2 - target});
        out.push_back({"Ateps_slope_second_diff", (s1 - s2) / (eps1 - eps2)});
    }
    return out;
}

} // namespace permlab
