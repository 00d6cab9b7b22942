#pragma once

// Real root isolation: Sturm sequences for exact polynomials, derivative
// bracketing for floating ones, and bisection helpers.

#include "polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace pellipse {

/// Bracketed bisection to (nearly) machine precision. f(lo) and f(hi) must
/// have opposite signs or one must vanish.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if ((flo > 0) == (fhi > 0)) throw DomainError("bisect: no sign change");
    for (int i = 0; i < max_iter; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = f(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Cauchy bound: every real root lies in [-B, B].
template <class T>
double cauchy_bound(const Polynomial<T>& p) {
    if (p.degree() <= 0) return 1.0;
    double lead = std::fabs(to_double(p.leading()));
    double m = 0;
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, std::fabs(to_double(p.coeff(k))) / lead);
    return 1.0 + m;
}

// ---------------------------------------------------------------- exact

using SturmSequence = std::vector<Polynomial<Rational>>;

inline SturmSequence sturm_sequence(const Polynomial<Rational>& p) {
    SturmSequence s;
    if (p.is_zero()) return s;
    s.push_back(p);
    s.push_back(p.derivative());
    while (!s.back().is_zero()) {
        Polynomial<Rational> r = divmod(s[s.size() - 2], s.back()).second;
        s.push_back(-r);
    }
    s.pop_back();
    return s;
}

inline int sign_variations(const SturmSequence& s, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& f : s) {
        int sg = sgn(f(x));
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++count;
        last = sg;
    }
    return count;
}

/// Number of distinct real roots in (lo, hi].
inline int count_roots(const SturmSequence& s, const Rational& lo, const Rational& hi) {
    return sign_variations(s, lo) - sign_variations(s, hi);
}

inline Rational rational_bound(const Polynomial<Rational>& p) {
    // Power of two above the Cauchy bound keeps bisection points dyadic.
    Rational b(1);
    Rational lead = abs(p.leading());
    Rational m(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rational r = abs(p.coeff(k)) / lead;
        if (r > m) m = r;
    }
    m += 1;
    while (b <= m) b *= 2;
    return b;
}

struct IsolatingInterval {
    Rational lo, hi; // exactly one root in (lo, hi)
};

/// Disjoint isolating intervals for the distinct real roots, ascending.
inline std::vector<IsolatingInterval> isolate_real_roots(const Polynomial<Rational>& p) {
    std::vector<IsolatingInterval> out;
    if (p.degree() <= 0) return out;
    // Sturm counts are over (lo, hi]; split points are kept off the roots.
    Polynomial<Rational> f = squarefree_part(p);
    SturmSequence s = sturm_sequence(f);
    Rational b = rational_bound(f);
    std::function<void(const Rational&, const Rational&, int)> rec = [&](const Rational& lo, const Rational& hi,
                                                                        int n) {
        if (n == 0) return;
        if (n == 1) {
            out.push_back({lo, hi});
            return;
        }
        // Split away from roots so that no interval endpoint is ever a root.
        Rational mid = (lo + hi) / 2;
        Rational step = (hi - lo) / 4;
        while (sgn(f(mid)) == 0) {
            step /= 2;
            mid += step;
        }
        rec(lo, mid, count_roots(s, lo, mid));
        rec(mid, hi, count_roots(s, mid, hi));
    };
    Rational lo = -b;
    rec(lo, b, count_roots(s, lo, b));
    std::sort(out.begin(), out.end(), [](const IsolatingInterval& x, const IsolatingInterval& y) {
        return x.lo < y.lo;
    });
    return out;
}

/// Refine an isolating interval of a square-free polynomial to double precision.
inline double refine_root(const Polynomial<Rational>& f, IsolatingInterval iv) {
    const int slo = sgn(f(iv.lo));
    for (int i = 0; i < 200; ++i) {
        Rational mid = (iv.lo + iv.hi) / 2;
        double w = std::fabs(Rational(iv.hi - iv.lo).get_d());
        double scale = std::max(1.0, std::fabs(mid.get_d()));
        if (w <= scale * 1e-18) break;
        int sm = sgn(f(mid));
        if (sm == 0) return mid.get_d();
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return Rational((iv.lo + iv.hi) / 2).get_d();
}

// ---------------------------------------------------------------- floating

/// Distinct real roots of a floating polynomial via derivative bracketing.
inline std::vector<double> real_roots_floating(const Polynomial<double>& p) {
    std::vector<double> roots;
    if (p.degree() <= 0) return roots;
    if (p.degree() == 1) {
        roots.push_back(-p.coeff(0) / p.coeff(1));
        return roots;
    }
    double b = cauchy_bound(p);
    std::vector<double> crit = real_roots_floating(p.derivative());
    std::vector<double> pts;
    pts.push_back(-b);
    for (double c : crit)
        if (c > -b && c < b) pts.push_back(c);
    pts.push_back(b);
    auto f = [&](double x) { return p(x); };
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double lo = pts[i], hi = pts[i + 1];
        double flo = f(lo), fhi = f(hi);
        if (flo == 0) {
            if (roots.empty() || std::fabs(roots.back() - lo) > 1e-12 * std::max(1.0, std::fabs(lo)))
                roots.push_back(lo);
            continue;
        }
        if ((flo > 0) != (fhi > 0) && fhi != 0) roots.push_back(bisect(f, lo, hi));
    }
    if (f(b) == 0) roots.push_back(b);
    // Touching roots at critical points: accept when |p| is at rounding level.
    for (double c : crit) {
        double mag = 0;
        double pw = 1;
        for (int k = 0; k <= p.degree(); ++k) {
            mag += std::fabs(p.coeff(k)) * pw;
            pw *= std::fabs(c);
        }
        if (std::fabs(f(c)) <= 1e-12 * mag) {
            bool dup = false;
            for (double r : roots)
                if (std::fabs(r - c) <= 1e-7 * std::max(1.0, std::fabs(c))) dup = true;
            if (!dup) roots.push_back(c);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Distinct real roots, ascending, as doubles.
inline std::vector<double> real_roots(const Polynomial<Rational>& p) {
    std::vector<double> r;
    if (p.degree() <= 0) return r;
    Polynomial<Rational> f = squarefree_part(p);
    for (const auto& iv : isolate_real_roots(f)) r.push_back(refine_root(f, iv));
    return r;
}
inline std::vector<double> real_roots(const Polynomial<double>& p) { return real_roots_floating(p); }

/// Distinct real roots inside (lo, hi).
template <class T>
std::vector<double> real_roots_in(const Polynomial<T>& p, double lo, double hi) {
    std::vector<double> out;
    for (double r : real_roots(p))
        if (r > lo && r < hi) out.push_back(r);
    return out;
}

} // namespace pellipse
