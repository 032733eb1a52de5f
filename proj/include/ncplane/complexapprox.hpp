#pragma once

#include <cmath>
#include <ostream>
#include <string>

#include "ncplane/rational.hpp"

namespace ncplane {

/// Comparison tolerance used by the approximate backend unless overridden.
inline constexpr double kDefaultTol = 1e-9;

/// Complex double scalar with an attached comparison tolerance. Realizes
/// roots of unity and square roots that have no rational value. Equality is
/// componentwise up to tol; arithmetic propagates the larger tolerance.
class ComplexApprox {
public:
    double re = 0.0;
    double im = 0.0;
    double tol = kDefaultTol;

    ComplexApprox() = default;
    ComplexApprox(int v) : re(v) {}  // NOLINT: scalar literal conversions
    ComplexApprox(double r, double i = 0.0, double t = kDefaultTol) : re(r), im(i), tol(t) {}
    explicit ComplexApprox(const Rational& r, double t = kDefaultTol) : re(r.to_double()), tol(t) {}

    friend ComplexApprox operator+(const ComplexApprox& a, const ComplexApprox& b) {
        return {a.re + b.re, a.im + b.im, std::max(a.tol, b.tol)};
    }
    friend ComplexApprox operator-(const ComplexApprox& a, const ComplexApprox& b) {
        return {a.re - b.re, a.im - b.im, std::max(a.tol, b.tol)};
    }
    friend ComplexApprox operator*(const ComplexApprox& a, const ComplexApprox& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, std::max(a.tol, b.tol)};
    }
    friend ComplexApprox operator/(const ComplexApprox& a, const ComplexApprox& b) {
        const double n = b.re * b.re + b.im * b.im;
        if (n == 0.0) throw precondition_error("division by zero (complex backend)");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n,
                std::max(a.tol, b.tol)};
    }
    ComplexApprox operator-() const { return {-re, -im, tol}; }
    ComplexApprox& operator+=(const ComplexApprox& o) { *this = *this + o; return *this; }
    ComplexApprox& operator-=(const ComplexApprox& o) { *this = *this - o; return *this; }
    ComplexApprox& operator*=(const ComplexApprox& o) { *this = *this * o; return *this; }
    ComplexApprox& operator/=(const ComplexApprox& o) { *this = *this / o; return *this; }

    friend bool operator==(const ComplexApprox& a, const ComplexApprox& b) {
        const double t = std::max(a.tol, b.tol);
        return std::abs(a.re - b.re) <= t && std::abs(a.im - b.im) <= t;
    }
    friend bool operator!=(const ComplexApprox& a, const ComplexApprox& b) { return !(a == b); }

    bool is_zero() const { return std::abs(re) <= tol && std::abs(im) <= tol; }
    double abs() const { return std::hypot(re, im); }
    ComplexApprox conj() const { return {re, -im, tol}; }

    /// Principal square root.
    ComplexApprox sqrt() const {
        const double r = abs();
        const double s = std::sqrt((r + re) / 2.0);
        double t = std::sqrt((r - re) / 2.0);
        if (im < 0) t = -t;
        return {s, t, tol};
    }

    std::string str() const;
    static ComplexApprox parse(const std::string& text, double tol = kDefaultTol);
};

/// e^{2 pi i k / n}.
inline ComplexApprox root_of_unity(int n, int k = 1, double tol = kDefaultTol) {
    const double phi = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(phi), std::sin(phi), tol};
}

inline std::string to_string(const ComplexApprox& z) { return z.str(); }

inline std::ostream& operator<<(std::ostream& os, const ComplexApprox& z) { return os << z.str(); }

}  // namespace ncplane
