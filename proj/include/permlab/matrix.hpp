#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "permlab/errors.hpp"
#include "permlab/rational.hpp"

namespace permlab {

// Dense square matrix over double or exact rationals, row-major.
// Sign-free by construction: subpermanent machinery also runs on signed
// matrices such as A - J_n, so nonnegativity is checked by the domain
// predicates (is_doubly_stochastic, is_in_kn), not stored as a type
// invariant.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, T(0)) { assert(n >= 1); }

    static Matrix zero(int n) { return Matrix(n); }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    // J_n: every entry 1/n
    static Matrix uniform(int n) {
        Matrix m(n);
        const T v = T(1) / T(n);
        for (auto& x : m.a_) x = v;
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        const int n = static_cast<int>(rows.size());
        Matrix m(n);
        int i = 0;
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n) throw DomainError("matrix rows must have length n");
            int j = 0;
            for (const auto& v : r) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    int n() const { return n_; }

    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    bool operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

    T entry_sum() const {
        T s(0);
        for (const auto& x : a_) s += x;
        return s;
    }

    T min_entry() const {
        T m = a_.at(0);
        for (const auto& x : a_)
            if (x < m) m = x;
        return m;
    }

    std::vector<T> row(int i) const {
        std::vector<T> r(n_);
        for (int j = 0; j < n_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    std::vector<T> col(int j) const {
        std::vector<T> c(n_);
        for (int i = 0; i < n_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    // submatrix keeping the given (strictly increasing) row/col indices
    Matrix keep(const std::vector<int>& rows, const std::vector<int>& cols) const {
        assert(rows.size() == cols.size());
        Matrix m(static_cast<int>(rows.size()));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = (*this)(rows[i], cols[j]);
        return m;
    }

    // submatrix deleting row i and column j
    Matrix minor_matrix(int i, int j) const {
        assert(n_ >= 2);
        Matrix m(n_ - 1);
        for (int r = 0, mr = 0; r < n_; ++r) {
            if (r == i) continue;
            for (int c = 0, mc = 0; c < n_; ++c) {
                if (c == j) continue;
                m(mr, mc++) = (*this)(r, c);
            }
            ++mr;
        }
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.n_ == b.n_);
        Matrix m(a.n_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
        return m;
    }

    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& x : m.a_) x = s * x;
        return m;
    }

    Matrix<double> to_double() const {
        Matrix<double> m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = permlab::to_double((*this)(i, j));
        return m;
    }

    Matrix<Rat> to_exact() const {
        Matrix<Rat> m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if constexpr (is_exact_v<T>)
                    m(i, j) = (*this)(i, j);
                else
                    m(i, j) = rat_from_double((*this)(i, j));
            }
        return m;
    }

  private:
    int n_ = 0;
    std::vector<T> a_;
};

using MatD = Matrix<double>;
using MatQ = Matrix<Rat>;

// t*J_n + (1-t)*A
template <class T>
Matrix<T> convex_with_uniform(const Matrix<T>& A, const T& t) {
    const int n = A.n();
    Matrix<T> m(n);
    const T u = t / T(n);
    const T s = T(1) - t;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = u + s * A(i, j);
    return m;
}

} // namespace permlab
