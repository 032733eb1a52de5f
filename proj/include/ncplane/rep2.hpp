#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ncplane/ncpoly.hpp"

namespace ncplane {

/// The five conjugation invariants of a pair of 2x2 matrices; the trace ring
/// is the polynomial ring on exactly these.
inline const ParamList kTraceVars = {"t_X", "d_X", "t_Y", "d_Y", "t_XY"};

/// Trace-ring context extended by the user parameters of f.
ParamList trace_context(const ParamList& user_params);

/// Coefficients of Phi(f) = c1 XY + c2 X + c3 Y + c4 I over the trace ring;
/// uniquely determined by f.
struct TraceVector {
    CoefPoly c1, c2, c3, c4;

    std::string str() const;
    friend bool operator==(const TraceVector& a, const TraceVector& b) {
        return a.c1 == b.c1 && a.c2 == b.c2 && a.c3 == b.c3 && a.c4 == b.c4;
    }
};

/// Cayley-Hamilton reduction of a plane free-algebra element to the basis
/// {I, X, Y, XY}. Words are folded right to left through the left action of
/// X and Y on the rank-4 module over the trace ring; the action tables come
/// from the three matrix identities
///   X^2 = t_X X - d_X,   X^3 = (t_X^2-d_X) X - t_X d_X,
///   YX  = -XY + t_X Y + t_Y X + t_XY - t_X t_Y,
/// together with associativity for the products against XY:
///   X*(XY) = (X^2)Y           = t_X XY - d_X Y
///   Y*(X)  = YX as above
///   Y*(XY) = (YX)Y, then Y^2  = d_Y X + t_XY Y - t_X d_Y I
/// The trace_eval oracle pins this derivation against brute-force matrix
/// evaluation.
TraceVector ch_reduce(const NCPoly& f);

/// d_[X,Y] = -1/4 ((2 t_XY - t_X t_Y)^2 - (t_X^2 - 4 d_X)(t_Y^2 - 4 d_Y)),
/// the determinant of the commutator; nonvanishing characterizes the simple
/// 2-dimensional representations.
CoefPoly formanek2();

/// The equations cutting Simp_2 out of the trace ring: a 2-dimensional
/// representation factors through a simple module of k<x,y>/(f) iff all four
/// coefficients vanish and the Formanek element does not.
struct Simp2System {
    TraceVector equations;
    CoefPoly formanek;
    ParamList parameters;  // user parameters of f
};

Simp2System simp2_system(const NCPoly& f);

std::string simp2_to_json(const Simp2System& s);

/// Substitutes the trace matrix invariants of concrete X, Y into a trace
/// vector: returns c1 XY + c2 X + c3 Y + c4 I. Oracle bridge to
/// nc_eval_matrix.
template <class S>
Mat<S> trace_eval(const TraceVector& tv, const Mat<S>& x, const Mat<S>& y,
                  const std::map<std::string, S>& params = {});

/// Generic-matrix substitution: the r*n^2 entry polynomials of the relations
/// evaluated at matrices of indeterminates x{i}_{pq} (1-based display
/// indices).
std::vector<CoefPoly> rep_variety_ideal(const std::vector<NCPoly>& fs, int n);

/// Names and matrices of the generic substitution, exposed for reuse.
std::pair<ParamList, std::vector<Mat<CoefPoly>>> generic_matrices(int m, int n,
                                                                  const ParamList& user_params);

/// Evaluate f at matrices over the coefficient ring itself.
Mat<CoefPoly> eval_generic(const NCPoly& f, const std::vector<Mat<CoefPoly>>& mats,
                           const ParamList& ctx);

/// det[X,Y] != 0: the pair generates M_2 iff the commutator is invertible.
template <class S>
bool simple2_check(const Mat<S>& x, const Mat<S>& y) {
    const Mat<S> c = (x * y - y * x).eval();
    return !ScalarTraits<S>::is_zero(det2(c));
}

/// Surjectivity of the structure map, decided by closing the span of
/// {I, rho(x_1), ..., rho(x_m)} under left multiplication by the generators
/// until stable; simple iff the span exhausts all of M_n.
template <class S>
bool simple_n_check(const MatrixRep<S>& rep);

// ---------------------------------------------------------------------------
// implementation

template <class S>
Mat<S> trace_eval(const TraceVector& tv, const Mat<S>& x, const Mat<S>& y,
                  const std::map<std::string, S>& params) {
    if (x.rows() != 2 || x.cols() != 2 || y.rows() != 2 || y.cols() != 2)
        throw precondition_error("trace_eval expects 2x2 matrices");
    std::map<std::string, S> assign = params;
    assign["t_X"] = x.trace();
    assign["d_X"] = det2(x);
    assign["t_Y"] = y.trace();
    assign["d_Y"] = det2(y);
    assign["t_XY"] = (x * y).eval().trace();
    const S c1 = tv.c1.eval(assign), c2 = tv.c2.eval(assign), c3 = tv.c3.eval(assign),
            c4 = tv.c4.eval(assign);
    Mat<S> out = Mat<S>::Zero(2, 2);
    const Mat<S> xy = (x * y).eval();
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j)
            out(i, j) = c1 * xy(i, j) + c2 * x(i, j) + c3 * y(i, j);
    out(0, 0) += c4;
    out(1, 1) += c4;
    return out;
}

template <class S>
bool simple_n_check(const MatrixRep<S>& rep) {
    const Eigen::Index n = rep.dim();
    if (n == 0) throw precondition_error("empty representation");
    const Eigen::Index width = n * n;
    auto flatten = [&](const Mat<S>& m) {
        Vec<S> v(width);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) v(i * n + j) = m(i, j);
        return v;
    };
    RowSpan<S> span(width);
    std::vector<Mat<S>> queue;
    auto push = [&](const Mat<S>& m) {
        if (span.insert(flatten(m))) queue.push_back(m);
    };
    push(identity<S>(n));
    for (const auto& g : rep.mats) push(g);
    while (!queue.empty() && span.dim() < static_cast<int>(width)) {
        const Mat<S> m = queue.back();
        queue.pop_back();
        for (const auto& g : rep.mats) push((g * m).eval());
    }
    return span.dim() == static_cast<int>(width);
}

}  // namespace ncplane
