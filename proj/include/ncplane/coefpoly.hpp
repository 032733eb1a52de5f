#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ncplane/errors.hpp"
#include "ncplane/scalar.hpp"

namespace ncplane {

/// Ordered list of parameter symbol names; position is identity.
using ParamList = std::vector<std::string>;

/// Dense exponent vector, one entry per parameter.
using ExpVec = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const ExpVec& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

/// Graded lexicographic, largest first: map iteration yields canonical
/// descending term order for rendering and hashing.
struct GrlexDescending {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        const auto da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return a > b;  // lexicographic on exponents, larger first
    }
};

/// Sparse commutative polynomial over exact rationals in a declared list of
/// parameter symbols. No zero coefficients are stored; the empty parameter
/// list yields plain rational arithmetic.
class CoefPoly {
public:
    CoefPoly() = default;
    CoefPoly(int c) : CoefPoly(Rational(c)) {}  // NOLINT: Eigen needs Scalar(0), Scalar(1)
    CoefPoly(Rational c) {                      // NOLINT: constant over the empty context
        if (!c.is_zero()) terms_[ExpVec{}] = std::move(c);
    }
    explicit CoefPoly(ParamList params) : params_(std::move(params)) {}

    static CoefPoly constant(ParamList params, Rational c);
    /// The monomial `name` (exponent 1) in the given context.
    static CoefPoly param(ParamList params, const std::string& name);
    static CoefPoly monomial(ParamList params, ExpVec exps, Rational c);

    const ParamList& params() const { return params_; }
    const std::map<ExpVec, Rational, GrlexDescending>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (zero polynomial gives 0).
    Rational constant_value() const;
    std::uint64_t degree() const;  // 0 for the zero polynomial

    CoefPoly& add_term(const ExpVec& e, const Rational& c);

    friend CoefPoly operator+(const CoefPoly& a, const CoefPoly& b);
    friend CoefPoly operator-(const CoefPoly& a, const CoefPoly& b);
    friend CoefPoly operator*(const CoefPoly& a, const CoefPoly& b);
    CoefPoly operator-() const;
    CoefPoly& operator+=(const CoefPoly& o) { *this = *this + o; return *this; }
    CoefPoly& operator-=(const CoefPoly& o) { *this = *this - o; return *this; }
    CoefPoly& operator*=(const CoefPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const CoefPoly& a, const CoefPoly& b);
    friend bool operator!=(const CoefPoly& a, const CoefPoly& b) { return !(a == b); }

    /// Reinterpret over a superset context (params must embed by name).
    CoefPoly lift_to(const ParamList& superset) const;

    /// Direct evaluation; every parameter must be assigned.
    template <class S>
    S eval(const std::map<std::string, S>& assignment) const;

    /// Ring-homomorphic substitution into another context. Every parameter
    /// must either be mapped or be present in `target` by name.
    CoefPoly subst(const ParamList& target, const std::map<std::string, CoefPoly>& map) const;

    /// Canonical text: graded-lex descending, `^` powers, explicit `*`.
    std::string str() const;

private:
    ParamList params_;
    std::map<ExpVec, Rational, GrlexDescending> terms_;

    friend struct CoefPolyOps;
};

/// Shared parameter context for a binary operation: identical contexts pass
/// through; a constant over the empty context adopts the other side's.
const ParamList& unify_params(const CoefPoly& a, const CoefPoly& b);

inline std::string to_string(const CoefPoly& p) { return p.str(); }

inline std::ostream& operator<<(std::ostream& os, const CoefPoly& p) { return os << p.str(); }

/// Parse a commutative polynomial in the declared parameters (the shared
/// expression grammar with zero generators).
CoefPoly cpoly_parse(const std::string& text, const ParamList& params);

template <class S>
S CoefPoly::eval(const std::map<std::string, S>& assignment) const {
    std::vector<S> values;
    values.reserve(params_.size());
    for (const auto& name : params_) {
        auto it = assignment.find(name);
        if (it == assignment.end())
            throw context_error("missing assignment for parameter '" + name + "'");
        values.push_back(it->second);
    }
    S acc = ScalarTraits<S>::from_rational(Rational(0));
    for (const auto& [e, c] : terms_) {
        S t = ScalarTraits<S>::from_rational(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= values[i];
        acc += t;
    }
    return acc;
}

}  // namespace ncplane
