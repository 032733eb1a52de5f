#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "ncplane/errors.hpp"

namespace ncplane {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored reduced with positive denominator;
/// zero is 0/1. Thin value wrapper so Eigen and the polynomial layers see a
/// plain arithmetic type.
class Rational {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rational() : v_(0) {}
    Rational(int v) : v_(v) {}            // NOLINT: implicit by design
    Rational(long long v) : v_(v) {}      // NOLINT
    Rational(const BigInt& v) : v_(v) {}  // NOLINT
    Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den == 0) throw precondition_error("rational with zero denominator");
    }
    explicit Rational(rep v) : v_(std::move(v)) {}

    static Rational parse(const std::string& text);

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(rep(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(rep(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(rep(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw precondition_error("division by zero");
        return Rational(rep(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(rep(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    BigInt num() const { return numerator(v_); }
    BigInt den() const { return denominator(v_); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator(v_) == 1; }
    int sign() const { return v_ == 0 ? 0 : (v_ < 0 ? -1 : 1); }
    Rational abs() const { return v_ < 0 ? -*this : *this; }

    double to_double() const { return v_.template convert_to<double>(); }
    std::string str() const;

    /// Exact square root when this is a perfect square of a rational.
    std::optional<Rational> sqrt_exact() const;

    const rep& raw() const { return v_; }

private:
    rep v_;
};

Rational pow(const Rational& base, unsigned exp);

inline std::string to_string(const Rational& r) { return r.str(); }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ncplane
