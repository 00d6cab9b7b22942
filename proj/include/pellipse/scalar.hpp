#pragma once

// Scalar kernels: double (floating), mpq_class (exact rational) and
// mpf_class (multiprecision floating, for ill-conditioned certificates).

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace pellipse {

using Rational = mpq_class;
using BigFloat = mpf_class;

inline constexpr unsigned long bigfloat_bits = 320;

namespace detail {
inline const bool bigfloat_precision_set = (mpf_set_default_prec(bigfloat_bits), true);
} // namespace detail

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr const char* name = "floating";
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "rational";
};

template <>
struct scalar_traits<BigFloat> {
    static constexpr bool exact = false;
    static constexpr const char* name = "multiprecision";
};

template <class T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(const BigFloat& x) { return x.get_d(); }

inline int sign_of(double x) { return (x > 0) - (x < 0); }
inline int sign_of(const Rational& x) { return sgn(x); }
inline int sign_of(const BigFloat& x) { return sgn(x); }

inline double abs_of(double x) { return std::fabs(x); }
inline Rational abs_of(const Rational& x) { return abs(x); }
inline BigFloat abs_of(const BigFloat& x) { return abs(x); }

// Unevaluated gmpxx expressions resolve to their value type.
template <class U>
double to_double(const __gmp_expr<mpq_t, U>& e) { return Rational(e).get_d(); }
template <class U>
double to_double(const __gmp_expr<mpf_t, U>& e) { return BigFloat(e).get_d(); }
template <class U>
int sign_of(const __gmp_expr<mpq_t, U>& e) { return sgn(Rational(e)); }
template <class U>
int sign_of(const __gmp_expr<mpf_t, U>& e) { return sgn(BigFloat(e)); }
template <class U>
Rational abs_of(const __gmp_expr<mpq_t, U>& e) { return abs(Rational(e)); }
template <class U>
BigFloat abs_of(const __gmp_expr<mpf_t, U>& e) { return abs(BigFloat(e)); }

/// |x| as a double, for pivot choice and scale estimates.
template <class T>
double magnitude(const T& x) {
    return to_double(abs_of(x));
}

template <class T>
T from_int(long v) {
    return T(v);
}

/// Tolerances threaded through every floating computation.
struct Tolerance {
    double boundary = 1e-9;  // absolute, on-boundary and touch-point tests
    double relative = 1e-10; // relative comparisons elsewhere

    static Tolerance with_epsilon(double eps) {
        Tolerance t;
        t.boundary = eps;
        t.relative = eps * 0.1;
        return t;
    }
};

/// Zero test: exact for rationals, |x| <= tol * scale for doubles.
inline bool near_zero(double x, double scale, double tol) {
    return std::fabs(x) <= tol * (scale > 0 ? scale : 1.0);
}
inline bool near_zero(const Rational& x, double, double) { return sgn(x) == 0; }
inline bool near_zero(const BigFloat& x, double scale, double tol) { return near_zero(x.get_d(), scale, tol); }

// Error hierarchy. Every failure the library reports derives from Error.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : Error {
    using Error::Error;
};
struct StepError : Error {
    int step;
    StepError(const std::string& what, int s) : Error(what), step(s) {}
};
struct ReflectionUndefined : StepError {
    explicit ReflectionUndefined(int s = -1)
        : StepError("reflection undefined: light-like normal", s) {}
};
struct DegenerateChord : StepError {
    explicit DegenerateChord(int s = -1)
        : StepError("degenerate chord: direction tangent to boundary", s) {}
};
struct NoCertificate : Error {
    using Error::Error;
};
struct CertificateInvalid : Error {
    using Error::Error;
};
struct QuadratureFailure : Error {
    using Error::Error;
};

/// Parse "4/3", "-7", "2.5", "1e-3". Integers and fractions are exact.
inline bool is_exact_literal(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            return false;
    return true;
}

inline Rational parse_rational(const std::string& s) {
    if (!is_exact_literal(s)) throw DomainError("not a rational literal: " + s);
    std::string t = s;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    Rational q;
    if (q.set_str(t, 10) != 0) throw DomainError("not a rational literal: " + s);
    if (q.get_den() == 0) throw DomainError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline double parse_real(const std::string& s) {
    if (is_exact_literal(s)) return parse_rational(s).get_d();
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw DomainError("not a number: " + s);
    }
    if (pos != s.size() || !std::isfinite(v)) throw DomainError("not a number: " + s);
    return v;
}

} // namespace pellipse
