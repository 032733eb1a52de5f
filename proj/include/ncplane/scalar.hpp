#pragma once

#include <optional>
#include <string>

#include "ncplane/complexapprox.hpp"
#include "ncplane/rational.hpp"

namespace ncplane {

/// Uniform view of the two scalar backends. Templated code asks the traits
/// for zero tests, equality, conversion from exact rationals and square
/// roots instead of touching the concrete type.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static bool equal(const Rational& a, const Rational& b) { return a == b; }
    static Rational from_rational(const Rational& r) { return r; }
    static std::optional<Rational> sqrt(const Rational& v) { return v.sqrt_exact(); }
    static std::string render(const Rational& v) { return v.str(); }
    static Rational parse(const std::string& text) { return Rational::parse(text); }
};

template <>
struct ScalarTraits<ComplexApprox> {
    static constexpr bool exact = false;
    static bool is_zero(const ComplexApprox& v) { return v.is_zero(); }
    static bool equal(const ComplexApprox& a, const ComplexApprox& b) { return a == b; }
    static ComplexApprox from_rational(const Rational& r) { return ComplexApprox(r); }
    static std::optional<ComplexApprox> sqrt(const ComplexApprox& v) { return v.sqrt(); }
    static std::string render(const ComplexApprox& v) { return v.str(); }
    static ComplexApprox parse(const std::string& text) { return ComplexApprox::parse(text); }
};

template <class S>
bool is_zero(const S& v) {
    return ScalarTraits<S>::is_zero(v);
}

}  // namespace ncplane
