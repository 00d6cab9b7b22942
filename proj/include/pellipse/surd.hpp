#pragma once

// Elements u + v*sqrt(D) of the real quadratic field Q(sqrt(D)).

#include "scalar.hpp"

#include <cmath>

namespace pellipse {

class Surd {
  public:
    Surd() : d_(0) {}
    Surd(Rational u, Rational v, Rational d) : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {
        if (sgn(d_) < 0) throw DomainError("surd radicand must be nonnegative");
    }
    static Surd rational(const Rational& u, const Rational& d) { return Surd(u, 0, d); }
    static Surd root(const Rational& d) { return Surd(0, 1, d); }

    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    const Rational& radicand() const { return d_; }

    bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }

    double to_double() const { return u_.get_d() + v_.get_d() * std::sqrt(d_.get_d()); }

    Surd conjugate() const { return Surd(u_, -v_, d_); }
    Rational norm() const { return u_ * u_ - v_ * v_ * d_; }

    friend Surd operator+(const Surd& x, const Surd& y) {
        check(x, y);
        return Surd(x.u_ + y.u_, x.v_ + y.v_, pick(x, y));
    }
    friend Surd operator-(const Surd& x, const Surd& y) {
        check(x, y);
        return Surd(x.u_ - y.u_, x.v_ - y.v_, pick(x, y));
    }
    friend Surd operator-(const Surd& x) { return Surd(-x.u_, -x.v_, x.d_); }
    friend Surd operator*(const Surd& x, const Surd& y) {
        check(x, y);
        const Rational& d = pick(x, y);
        return Surd(x.u_ * y.u_ + x.v_ * y.v_ * d, x.u_ * y.v_ + x.v_ * y.u_, d);
    }
    friend Surd operator/(const Surd& x, const Surd& y) {
        check(x, y);
        Rational n = y.norm();
        if (sgn(n) == 0) throw DomainError("surd division by zero");
        Surd num = x * y.conjugate();
        return Surd(num.u_ / n, num.v_ / n, num.d_);
    }
    friend Surd operator*(const Rational& s, const Surd& x) { return Surd(s * x.u_, s * x.v_, x.d_); }
    friend Surd operator+(const Rational& s, const Surd& x) { return Surd(s + x.u_, x.v_, x.d_); }
    friend Surd operator-(const Surd& x, const Rational& s) { return Surd(x.u_ - s, x.v_, x.d_); }
    friend bool operator==(const Surd& x, const Surd& y) { return (x - y).is_zero(); }

  private:
    // A zero radicand marks a plain rational that can mix with any field.
    static void check(const Surd& x, const Surd& y) {
        if (sgn(x.d_) != 0 && sgn(y.d_) != 0 && x.d_ != y.d_ && sgn(x.v_) != 0 && sgn(y.v_) != 0)
            throw DomainError("surds from different quadratic fields");
    }
    static const Rational& pick(const Surd& x, const Surd& y) {
        if (sgn(x.v_) != 0) return x.d_;
        if (sgn(y.v_) != 0) return y.d_;
        return sgn(x.d_) != 0 ? x.d_ : y.d_;
    }

    Rational u_, v_, d_;
};

} // namespace pellipse
