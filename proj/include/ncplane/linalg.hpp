#pragma once

#include <Eigen/Dense>

#include "ncplane/coefpoly.hpp"
#include "ncplane/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<ncplane::Rational> {
    using Real = ncplane::Rational;
    using NonInteger = ncplane::Rational;
    using Nested = ncplane::Rational;
    using Literal = ncplane::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60
    };
    static ncplane::Rational epsilon() { return ncplane::Rational(0); }
    static ncplane::Rational dummy_precision() { return ncplane::Rational(0); }
    static int digits10() { return 0; }
};

template <>
struct NumTraits<ncplane::ComplexApprox> {
    using Real = ncplane::ComplexApprox;
    using NonInteger = ncplane::ComplexApprox;
    using Nested = ncplane::ComplexApprox;
    using Literal = ncplane::ComplexApprox;
    enum {
        IsComplex = 0,  // treated as a plain field; no conj/real plumbing
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 4,
        MulCost = 8
    };
    static ncplane::ComplexApprox epsilon() { return ncplane::ComplexApprox(0.0); }
    static ncplane::ComplexApprox dummy_precision() { return ncplane::ComplexApprox(0.0); }
    static int digits10() { return 15; }
};

template <>
struct NumTraits<ncplane::CoefPoly> {
    using Real = ncplane::CoefPoly;
    using NonInteger = ncplane::CoefPoly;
    using Nested = ncplane::CoefPoly;
    using Literal = ncplane::CoefPoly;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 32,
        AddCost = 200,
        MulCost = 400
    };
    static ncplane::CoefPoly epsilon() { return ncplane::CoefPoly(0); }
    static ncplane::CoefPoly dummy_precision() { return ncplane::CoefPoly(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace ncplane {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
Mat<S> identity(Eigen::Index n) {
    Mat<S> m = Mat<S>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
}

namespace detail {

inline double pivot_size(const Rational& v) { return v.is_zero() ? 0.0 : 1.0; }
inline double pivot_size(const ComplexApprox& v) { return v.abs(); }

/// Row-echelon rank. The exact backend uses fraction-free (Bareiss)
/// elimination; the approximate backend uses partial pivoting where pivots
/// below tol * (largest entry magnitude) count as zero.
template <class S>
int rank_impl(Mat<S> m) {
    const Eigen::Index rows = m.rows(), cols = m.cols();
    int rank = 0;
    Eigen::Index row = 0;
    if constexpr (ScalarTraits<S>::exact) {
        S prev = S(1);
        for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
            Eigen::Index piv = -1;
            for (Eigen::Index i = row; i < rows; ++i)
                if (!ScalarTraits<S>::is_zero(m(i, col))) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            m.row(row).swap(m.row(piv));
            for (Eigen::Index i = row + 1; i < rows; ++i) {
                for (Eigen::Index j = col + 1; j < cols; ++j)
                    m(i, j) = (m(row, col) * m(i, j) - m(i, col) * m(row, j)) / prev;
                m(i, col) = S(0);
            }
            prev = m(row, col);
            ++rank;
            ++row;
        }
    } else {
        double maxabs = 0.0, tol = kDefaultTol;
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) {
                maxabs = std::max(maxabs, pivot_size(m(i, j)));
                tol = std::max(tol, m(i, j).tol);
            }
        const double threshold = tol * std::max(maxabs, 1.0);
        for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
            Eigen::Index best = -1;
            double best_size = threshold;
            for (Eigen::Index i = row; i < rows; ++i) {
                const double s = pivot_size(m(i, col));
                if (s > best_size) {
                    best_size = s;
                    best = i;
                }
            }
            if (best < 0) continue;
            m.row(row).swap(m.row(best));
            for (Eigen::Index i = row + 1; i < rows; ++i) {
                if (pivot_size(m(i, col)) <= threshold) {
                    m(i, col) = S(0);
                    continue;
                }
                const S factor = m(i, col) / m(row, col);
                for (Eigen::Index j = col; j < cols; ++j) m(i, j) -= factor * m(row, j);
                m(i, col) = S(0);
            }
            ++rank;
            ++row;
        }
    }
    return rank;
}

}  // namespace detail

template <class S>
int rank(const Mat<S>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return detail::rank_impl<S>(m);
}

template <class S>
int nullity(const Mat<S>& m) {
    return static_cast<int>(m.cols()) - rank(m);
}

/// Does b lie in the column span of A?
template <class S>
bool in_column_span(const Mat<S>& a, const Vec<S>& b) {
    Mat<S> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    return rank(aug) == rank(a);
}

template <class S>
S det2(const Mat<S>& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

/// Incrementally maintained row space in echelon form. Supports span-closure
/// loops and membership queries without re-eliminating from scratch.
template <class S>
class RowSpan {
public:
    explicit RowSpan(Eigen::Index width) : width_(width) {}

    int dim() const { return static_cast<int>(rows_.size()); }

    /// Adds v to the span. Returns true iff the dimension grew.
    bool insert(Vec<S> v) {
        const double threshold = reduce(v);
        Eigen::Index lead = leading(v, threshold);
        if (lead < 0) return false;
        const S pivot = v(lead);
        for (Eigen::Index j = 0; j < width_; ++j) v(j) /= pivot;
        rows_.push_back(std::move(v));
        leads_.push_back(lead);
        return true;
    }

    bool contains(Vec<S> v) const {
        const double threshold = reduce(v);
        return leading(v, threshold) < 0;
    }

private:
    double reduce(Vec<S>& v) const {
        double tol = 0.0;
        if constexpr (!ScalarTraits<S>::exact) {
            double maxabs = 1.0;
            tol = kDefaultTol;
            for (Eigen::Index j = 0; j < width_; ++j) {
                maxabs = std::max(maxabs, detail::pivot_size(v(j)));
                tol = std::max(tol, v(j).tol);
            }
            tol *= maxabs;
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const S factor = v(leads_[r]);
            if (detail::pivot_size(factor) <= tol) continue;
            for (Eigen::Index j = 0; j < width_; ++j) v(j) -= factor * rows_[r](j);
        }
        return tol;
    }

    Eigen::Index leading(const Vec<S>& v, double threshold) const {
        for (Eigen::Index j = 0; j < width_; ++j)
            if (detail::pivot_size(v(j)) > threshold) return j;
        return -1;
    }

    Eigen::Index width_;
    std::vector<Vec<S>> rows_;
    std::vector<Eigen::Index> leads_;
};

template <class S>
bool is_zero_matrix(const Mat<S>& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!ScalarTraits<S>::is_zero(m(i, j))) return false;
    return true;
}

}  // namespace ncplane
