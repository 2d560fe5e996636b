#pragma once

#include <algorithm>
#include <vector>

#include "permlab/errors.hpp"
#include "permlab/rational.hpp"

namespace permlab {

// Univariate polynomial by ascending-degree coefficient sequence.
// Trailing zero coefficients are trimmed, so degree() is honest; the
// zero polynomial has degree -1.
template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }

    T max_abs_coeff() const {
        T m(0);
        for (const auto& x : c_) m = std::max(m, scalar_abs(x));
        return m;
    }

    T eval(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = T(static_cast<int>(i)) * c_[i];
        return Poly(std::move(d));
    }

    Poly operator+(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    friend Poly operator*(const T& s, const Poly& p) {
        std::vector<T> r = p.c_;
        for (auto& x : r) x = s * x;
        return Poly(std::move(r));
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // Newton divided-difference interpolation; exact over rationals.
    // Nodes must be pairwise distinct.
    static Poly interpolate(const std::vector<T>& xs, const std::vector<T>& ys) {
        const std::size_t m = xs.size();
        if (m == 0 || ys.size() != m) throw DomainError("interpolate: bad node count");
        std::vector<T> dd = ys; // divided differences, upgraded in place
        for (std::size_t level = 1; level < m; ++level)
            for (std::size_t i = m - 1; i >= level; --i) {
                const T denom = xs[i] - xs[i - level];
                if (denom == T(0)) throw DomainError("interpolate: repeated node");
                dd[i] = (dd[i] - dd[i - 1]) / denom;
                if (i == level) break;
            }
        // expand the Newton form into monomial coefficients
        Poly acc = Poly::constant(dd[m - 1]);
        for (std::size_t i = m - 1; i-- > 0;) {
            acc = acc * Poly(std::vector<T>{-xs[i], T(1)}) + Poly::constant(dd[i]);
        }
        return acc;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using PolyD = Poly<double>;
using PolyQ = Poly<Rat>;

template <class T>
Poly<double> poly_to_double(const Poly<T>& p) {
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(to_double(x));
    return Poly<double>(std::move(c));
}

inline Poly<Rat> poly_to_exact(const Poly<double>& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (double x : p.coeffs()) c.push_back(rat_from_double(x));
    return Poly<Rat>(std::move(c));
}

} // namespace permlab
