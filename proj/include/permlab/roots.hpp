#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "permlab/poly.hpp"

namespace permlab {

struct RootInterval {
    double lo = 0;
    double hi = 0;
    double mid() const { return 0.5 * (lo + hi); }
};

namespace detail {

// quotient-free polynomial remainder over rationals
inline PolyQ poly_rem(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> r = a.coeffs();
    const auto& d = b.coeffs();
    const int db = b.degree();
    while (static_cast<int>(r.size()) - 1 >= db) {
        const Rat lead = r.back() / d.back();
        const std::size_t shift = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= lead * d[i];
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.empty()) break;
    }
    return PolyQ(std::move(r));
}

// exact quotient; caller guarantees b divides a
inline PolyQ poly_div_exact(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> r = a.coeffs();
    const auto& d = b.coeffs();
    const int db = b.degree();
    std::vector<Rat> q(a.degree() - db + 1, Rat(0));
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        const Rat lead = r.back() / d.back();
        const std::size_t shift = r.size() - d.size();
        q[shift] = lead;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= lead * d[i];
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return PolyQ(std::move(q));
}

inline PolyQ poly_gcd(PolyQ a, PolyQ b) {
    while (!b.is_zero()) {
        PolyQ r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // normalize to monic
    std::vector<Rat> c = a.coeffs();
    const Rat lead = c.back();
    for (auto& x : c) x /= lead;
    return PolyQ(std::move(c));
}

// synthetic division by (t - root); caller guarantees divisibility
inline PolyQ deflate_at(const PolyQ& p, const Rat& root) {
    const auto& c = p.coeffs();
    std::vector<Rat> q(c.size() - 1);
    Rat carry = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        if (i < q.size()) q[i] = carry;
        carry = c[i] + carry * root;
    }
    return PolyQ(std::move(q));
}

inline std::vector<PolyQ> sturm_chain(const PolyQ& p) {
    std::vector<PolyQ> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() >= 1) {
        PolyQ r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(Rat(-1) * r);
    }
    return chain;
}

inline int sign_variations(const std::vector<PolyQ>& chain, const Rat& x) {
    int v = 0, prev = 0;
    for (const auto& q : chain) {
        const Rat val = q.eval(x);
        const int s = val == 0 ? 0 : (val > 0 ? 1 : -1);
        if (s != 0) {
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
    }
    return v;
}

} // namespace detail

// Decides whether p has a real root in the open interval (0,1). Returns
// a bracketing interval of width <= tol around one root, or nullopt.
// Coefficients are handled exactly (doubles promote to dyadic
// rationals), roots at 0 and 1 are divided out first, and the count
// uses a Sturm chain of the squarefree part, so the decision itself is
// exact. The zero polynomial reports no roots.
inline std::optional<RootInterval> roots_in_open_unit(const PolyQ& p_in, double tol = 1e-12) {
    if (p_in.is_zero()) return std::nullopt;
    PolyQ p = p_in;

    // strip roots at the endpoints: they are outside the open interval
    while (!p.is_zero() && p.coeff(0) == 0) p = detail::deflate_at(p, Rat(0));
    while (!p.is_zero() && p.eval(Rat(1)) == 0) p = detail::deflate_at(p, Rat(1));
    if (p.degree() < 1) return std::nullopt;

    const PolyQ g = detail::poly_gcd(p, p.derivative());
    const PolyQ q = g.degree() >= 1 ? detail::poly_div_exact(p, g) : p;

    const auto chain = detail::sturm_chain(q);
    Rat lo(0), hi(1);
    int vlo = detail::sign_variations(chain, lo);
    int vhi = detail::sign_variations(chain, hi);
    if (vlo - vhi <= 0) return std::nullopt;

    const Rat width_goal = rat_from_double(tol);
    while (hi - lo > width_goal) {
        const Rat mid = (lo + hi) / 2;
        if (q.eval(mid) == 0) {
            const Rat h = width_goal / 2;
            return RootInterval{to_double(Rat(mid - h)), to_double(Rat(mid + h))};
        }
        const int vmid = detail::sign_variations(chain, mid);
        if (vlo - vmid > 0) {
            hi = mid;
            vhi = vmid;
        } else {
            lo = mid;
            vlo = vmid;
        }
    }
    return RootInterval{to_double(lo), to_double(hi)};
}

inline std::optional<RootInterval> roots_in_open_unit(const PolyD& p, double tol = 1e-12) {
    return roots_in_open_unit(poly_to_exact(p), tol);
}

} // namespace permlab
