#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ncplane/coefpoly.hpp"
#include "ncplane/linalg.hpp"
#include "ncplane/word.hpp"

namespace ncplane {

/// All computations in this artifact stay at desk scale; longer words signal
/// a runaway expression.
inline constexpr std::size_t kMaxWordLength = 32;

/// Display name of generator i in an m-generator algebra.
std::string gen_name(int m, int i);

/// A tuple of scalars naming a 1-dimensional representation.
template <class S>
struct Point {
    std::vector<S> coords;

    Point() = default;
    explicit Point(std::vector<S> c) : coords(std::move(c)) {}
    Point(S a, S b) : coords{std::move(a), std::move(b)} {}

    std::size_t dim() const { return coords.size(); }
    const S& operator[](std::size_t i) const { return coords[i]; }

    friend bool operator==(const Point& a, const Point& b) {
        if (a.coords.size() != b.coords.size()) return false;
        for (std::size_t i = 0; i < a.coords.size(); ++i)
            if (!ScalarTraits<S>::equal(a.coords[i], b.coords[i])) return false;
        return true;
    }
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) out += ",";
            out += ScalarTraits<S>::render(coords[i]);
        }
        return out;
    }
};

/// A point with coordinates that are freshly adjoined central parameters.
struct SymbolicPoint {
    std::vector<std::string> names;

    explicit SymbolicPoint(std::vector<std::string> n) : names(std::move(n)) {}
    std::size_t dim() const { return names.size(); }
};

/// m square matrices of equal size: a candidate m-generator representation.
template <class S>
struct MatrixRep {
    std::vector<Mat<S>> mats;

    MatrixRep() = default;
    explicit MatrixRep(std::vector<Mat<S>> ms) : mats(std::move(ms)) {
        for (const auto& m : mats)
            if (m.rows() != dim() || m.cols() != dim())
                throw precondition_error("representation matrices must be square of equal size");
    }

    Eigen::Index dim() const { return mats.empty() ? 0 : mats[0].rows(); }
    std::size_t generators() const { return mats.size(); }
};

/// Sparse element of the free algebra k<x_1,...,x_m> with CoefPoly
/// coefficients. Canonical term order is deglex on words; no zero
/// coefficients are stored.
class NCPoly {
public:
    NCPoly() = default;
    NCPoly(int m, ParamList params) : m_(m), params_(std::move(params)) {}

    static NCPoly generator(int m, ParamList params, int i);
    static NCPoly constant(int m, ParamList params, CoefPoly c);
    static NCPoly constant(int m, ParamList params, Rational c);

    int generators() const { return m_; }
    const ParamList& params() const { return params_; }
    const std::map<Word, CoefPoly, DeglexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t degree() const;  // max word length; 0 for the zero polynomial
    const CoefPoly& coefficient(const Word& w) const;

    NCPoly& add_term(const Word& w, const CoefPoly& c);

    friend NCPoly operator+(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    NCPoly operator-() const;
    NCPoly& operator+=(const NCPoly& o) { *this = *this + o; return *this; }
    NCPoly& operator-=(const NCPoly& o) { *this = *this - o; return *this; }
    NCPoly& operator*=(const NCPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const NCPoly& a, const NCPoly& b);
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    /// Multiply by a coefficient-ring element.
    NCPoly scaled(const CoefPoly& c) const;
    NCPoly scaled(const Rational& c) const { return scaled(CoefPoly(c)); }

    /// Image in the commutative polynomial ring: each word maps to its
    /// commutative monomial. The result lives over [generators..., params...].
    CoefPoly abelianize() const;

    /// Image under x_i -> image_names[i] as commuting symbols (evaluation at
    /// a symbolic point). Result lives over [image_names..., params...].
    CoefPoly eval_symbolic(const std::vector<std::string>& image_names) const;

    /// Value of the 1-dimensional representation at p applied to this.
    template <class S>
    S eval_point(const Point<S>& p, const std::map<std::string, S>& assignment = {}) const;

    /// Word-by-word matrix product, summed with coefficients.
    template <class S>
    Mat<S> eval_matrix(const MatrixRep<S>& rep,
                       const std::map<std::string, S>& assignment = {}) const;

    /// Reinterpret over a wider algebra and/or parameter context. Any
    /// remapping of generator indices is given by gen_map.
    NCPoly lift(int new_m, const ParamList& new_params,
                const std::vector<int>& gen_map = {}) const;

    /// Canonical text rendering (parseable by nc_parse).
    std::string str() const;

private:
    int m_ = 0;
    ParamList params_;
    std::map<Word, CoefPoly, DeglexLess> terms_;
};

NCPoly commutator(const NCPoly& a, const NCPoly& b);
NCPoly pow(const NCPoly& base, unsigned exp);

inline std::string to_string(const NCPoly& f) { return f.str(); }

inline std::ostream& operator<<(std::ostream& os, const NCPoly& f) { return os << f.str(); }

template <class S>
S NCPoly::eval_point(const Point<S>& p, const std::map<std::string, S>& assignment) const {
    if (p.dim() != static_cast<std::size_t>(m_))
        throw precondition_error("point dimension does not match generator count");
    S acc = ScalarTraits<S>::from_rational(Rational(0));
    for (const auto& [w, c] : terms_) {
        S t = c.eval(assignment);
        for (int letter : w) t *= p.coords[static_cast<std::size_t>(letter)];
        acc += t;
    }
    return acc;
}

template <class S>
Mat<S> NCPoly::eval_matrix(const MatrixRep<S>& rep,
                           const std::map<std::string, S>& assignment) const {
    if (rep.generators() != static_cast<std::size_t>(m_))
        throw precondition_error("representation generator count does not match");
    const Eigen::Index n = rep.dim();
    Mat<S> acc = Mat<S>::Zero(n, n);
    for (const auto& [w, c] : terms_) {
        Mat<S> prod = identity<S>(n);
        for (int letter : w) prod = (prod * rep.mats[static_cast<std::size_t>(letter)]).eval();
        const S cv = c.eval(assignment);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) acc(i, j) += cv * prod(i, j);
    }
    return acc;
}

}  // namespace ncplane
