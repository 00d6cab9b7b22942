#pragma once

// Small dense matrices: determinants and null vectors over either kernel.

#include "scalar.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace pellipse {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline bool pivot_usable(const Rational& v) { return sgn(v) != 0; }
inline bool pivot_usable(double v) { return v != 0.0; }
inline bool pivot_usable(const BigFloat& v) { return sgn(v) != 0; }

} // namespace detail

/// Determinant by Gaussian elimination (partial pivoting for doubles).
template <class T>
T determinant(Matrix<T> m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        if constexpr (is_exact_v<T>) {
            for (std::size_t r = col; r < n; ++r)
                if (detail::pivot_usable(m[r][col])) {
                    piv = r;
                    break;
                }
        } else {
            double best = 0;
            for (std::size_t r = col; r < n; ++r)
                if (magnitude(m[r][col]) > best) {
                    best = magnitude(m[r][col]);
                    piv = r;
                }
        }
        if (piv == n) return T(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sign_of(m[r][col]) == 0) continue;
            T f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

/// Null vector of a square matrix assumed to have corank >= 1.
/// Full pivoting; the last pivot is treated as zero, so for a floating
/// matrix that is singular only up to rounding this returns the
/// direction of its smallest singular behaviour.
template <class T>
std::vector<T> null_vector(Matrix<T> m) {
    const std::size_t n = m.size();
    if (n == 0) return {};
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t rank = 0;
    for (std::size_t step = 0; step + 1 < n || (is_exact_v<T> && step < n); ++step) {
        std::size_t pr = n, pc = n;
        double best = 0;
        for (std::size_t r = step; r < n; ++r)
            for (std::size_t c = step; c < n; ++c) {
                if constexpr (is_exact_v<T>) {
                    if (pr == n && sign_of(m[r][c]) != 0) {
                        pr = r;
                        pc = c;
                    }
                } else {
                    if (magnitude(m[r][c]) > best) {
                        best = magnitude(m[r][c]);
                        pr = r;
                        pc = c;
                    }
                }
            }
        if (pr == n) break;
        std::swap(m[pr], m[step]);
        if (pc != step) {
            for (auto& row : m) std::swap(row[pc], row[step]);
            std::swap(perm[pc], perm[step]);
        }
        for (std::size_t r = step + 1; r < n; ++r) {
            if (sign_of(m[r][step]) == 0) continue;
            T f = m[r][step] / m[step][step];
            for (std::size_t c = step; c < n; ++c) m[r][c] -= f * m[step][c];
        }
        rank = step + 1;
    }
    if (rank >= n) throw NoCertificate("matrix has trivial null space");
    // Free variables rank..n-1: set the first to 1, the rest to 0.
    std::vector<T> y(n, T(0));
    y[rank] = T(1);
    for (std::size_t i = rank; i-- > 0;) {
        T acc(0);
        for (std::size_t c = i + 1; c < n; ++c) acc += m[i][c] * y[c];
        y[i] = -acc / m[i][i];
    }
    std::vector<T> x(n, T(0));
    for (std::size_t k = 0; k < n; ++k) x[perm[k]] = y[k];
    return x;
}

/// Euclidean row norms, used for scale-aware floating zero tests.
template <class T>
double row_norm_product(const Matrix<T>& m) {
    double p = 1;
    for (const auto& row : m) {
        double s = 0;
        for (const T& v : row) s += to_double(v) * to_double(v);
        p *= std::sqrt(s);
    }
    return p;
}

} // namespace pellipse
