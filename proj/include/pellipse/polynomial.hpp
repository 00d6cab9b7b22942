#pragma once

// Dense univariate polynomials with ascending coefficients.

#include "scalar.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace pellipse {

template <class T>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    static Polynomial monomial(const T& coef, int k) {
        std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
        c[static_cast<std::size_t>(k)] = coef;
        return Polynomial(std::move(c));
    }
    /// The linear polynomial x - r.
    static Polynomial linear_root(const T& r) { return Polynomial(std::vector<T>{T(-r), T(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(int k) const {
        if (k < 0 || k > degree()) return T(0);
        return c_[static_cast<std::size_t>(k)];
    }
    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    T operator()(const T& x) const {
        T r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// Evaluate at a double point regardless of the coefficient kernel.
    double eval_double(double x) const {
        double r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + to_double(*it);
        return r;
    }

    Polynomial<double> to_double_poly() const {
        std::vector<double> d;
        d.reserve(c_.size());
        for (const T& v : c_) d.push_back(to_double(v));
        return Polynomial<double>(std::move(d));
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    /// s^n p(1/s); requires n >= degree.
    Polynomial reversed(int n) const {
        if (n < degree()) throw DomainError("reversal order below degree");
        std::vector<T> r(static_cast<std::size_t>(n) + 1, T(0));
        for (int k = 0; k <= degree(); ++k) r[static_cast<std::size_t>(n - k)] = c_[static_cast<std::size_t>(k)];
        return Polynomial(std::move(r));
    }

    /// p(q(x)).
    Polynomial compose(const Polynomial& inner) const {
        Polynomial r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + constant(*it);
        return r;
    }

    double max_abs_coeff() const {
        double m = 0;
        for (const T& v : c_) m = std::max(m, std::fabs(to_double(v)));
        return m;
    }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        std::vector<T> r(std::max(p.c_.size(), q.c_.size()), T(0));
        for (std::size_t k = 0; k < p.c_.size(); ++k) r[k] += p.c_[k];
        for (std::size_t k = 0; k < q.c_.size(); ++k) r[k] += q.c_[k];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& p) {
        std::vector<T> r(p.c_);
        for (T& v : r) v = -v;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<T> r(p.c_.size() + q.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const T& s, const Polynomial& p) {
        std::vector<T> r(p.c_);
        for (T& v : r) v *= s;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator+(const Polynomial& p, const T& s) { return p + constant(s); }
    friend Polynomial operator-(const Polynomial& p, const T& s) { return p - constant(s); }
    Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
    Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
    Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }

    Polynomial pow(int e) const {
        Polynomial r = constant(T(1));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

  private:
    void trim() {
        while (!c_.empty() && sign_of(c_.back()) == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

/// Euclidean division: num = quot * den + rem, deg rem < deg den.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& num, const Polynomial<T>& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<T> r = num.coeffs();
    const int dd = den.degree();
    const int nd = num.degree();
    if (nd < dd) return {Polynomial<T>(), num};
    std::vector<T> q(static_cast<std::size_t>(nd - dd) + 1, T(0));
    const T lead = den.leading();
    for (int k = nd - dd; k >= 0; --k) {
        T f = r[static_cast<std::size_t>(k + dd)] / lead;
        q[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= dd; ++j) r[static_cast<std::size_t>(k + j)] -= f * den.coeff(j);
        r[static_cast<std::size_t>(k + dd)] = T(0);
    }
    r.resize(static_cast<std::size_t>(dd));
    return {Polynomial<T>(std::move(q)), Polynomial<T>(std::move(r))};
}

/// Monic greatest common divisor (exact kernel).
inline Polynomial<Rational> gcd(Polynomial<Rational> f, Polynomial<Rational> g) {
    while (!g.is_zero()) {
        Polynomial<Rational> r = divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return f;
    Rational lead = f.leading();
    return Rational(1) / lead * f;
}

/// Square-free part f / gcd(f, f').
inline Polynomial<Rational> squarefree_part(const Polynomial<Rational>& f) {
    if (f.degree() <= 0) return f;
    return divmod(f, gcd(f, f.derivative())).first;
}

/// Chebyshev polynomial of the first kind, T_{n+1} = 2x T_n - T_{n-1}.
template <class T>
Polynomial<T> chebyshev(int n) {
    if (n < 0) throw DomainError("chebyshev degree must be nonnegative");
    Polynomial<T> t0 = Polynomial<T>::constant(T(1));
    if (n == 0) return t0;
    Polynomial<T> t1 = Polynomial<T>::monomial(T(1), 1);
    const Polynomial<T> two_x = Polynomial<T>::monomial(T(2), 1);
    for (int k = 1; k < n; ++k) {
        Polynomial<T> t2 = two_x * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

/// Chebyshev polynomial of the second kind, U_{n+1} = 2x U_n - U_{n-1}.
template <class T>
Polynomial<T> chebyshev_u(int n) {
    if (n < 0) return {};
    Polynomial<T> u0 = Polynomial<T>::constant(T(1));
    if (n == 0) return u0;
    Polynomial<T> u1 = Polynomial<T>::monomial(T(2), 1);
    const Polynomial<T> two_x = Polynomial<T>::monomial(T(2), 1);
    for (int k = 1; k < n; ++k) {
        Polynomial<T> u2 = two_x * u1 - u0;
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return u1;
}

/// Square root of a floating polynomial with nonnegative leading coefficient.
/// Returns nullopt when the remainder exceeds tol relative to the input.
inline std::optional<Polynomial<double>> poly_sqrt(const Polynomial<double>& f, double tol) {
    if (f.is_zero()) return Polynomial<double>();
    const int d = f.degree();
    if (d % 2 != 0 || f.leading() < 0) return std::nullopt;
    const int h = d / 2;
    std::vector<double> r(static_cast<std::size_t>(h) + 1, 0.0);
    // Match coefficients from the top: (sum r_i x^i)^2 = f.
    r[static_cast<std::size_t>(h)] = std::sqrt(f.leading());
    if (r[static_cast<std::size_t>(h)] == 0) return std::nullopt;
    for (int k = h - 1; k >= 0; --k) {
        // coefficient of x^{h+k}: 2 r_h r_k + sum_{i+j=h+k, k<i,j<h} r_i r_j
        double acc = f.coeff(h + k);
        for (int i = k + 1; i < h; ++i) {
            int j = h + k - i;
            if (j > k && j < h) acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j)];
        }
        r[static_cast<std::size_t>(k)] = acc / (2 * r[static_cast<std::size_t>(h)]);
    }
    Polynomial<double> root(r);
    Polynomial<double> diff = root * root - f;
    double scale = std::max(1.0, f.max_abs_coeff());
    if (diff.max_abs_coeff() > tol * scale) return std::nullopt;
    return root;
}

/// Coefficient list in ascending powers, e.g. [1, 64/3, 128/9].
template <class T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
    os << '[';
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << ", ";
        os << p.coeffs()[i];
    }
    return os << ']';
}

} // namespace pellipse
