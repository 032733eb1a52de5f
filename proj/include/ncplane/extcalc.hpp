#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncplane/ncdiff.hpp"
#include "ncplane/ncpoly.hpp"

namespace ncplane {

/// Noncommutative Jacobi matrix of a presentation: entries[j][k] = D_k(f^j;p)
/// over the base point's context (symbolic coordinates adjoined as central
/// parameters when the base point is symbolic).
struct JacobiMatrix {
    int m = 0;
    ParamList context;
    std::vector<std::string> point_symbols;  // empty for a numeric base point
    std::vector<std::vector<NCPoly>> entries;

    std::size_t relations() const { return entries.size(); }
};

/// m is inferred from fs when omitted; it must be supplied for an empty
/// presentation.
JacobiMatrix jacobi_matrix(const std::vector<NCPoly>& fs, const SymbolicPoint& u, int m = -1);
JacobiMatrix jacobi_matrix(const std::vector<NCPoly>& fs, const Point<Rational>& p, int m = -1);

/// dim_k Ext^1_A(k(p1), k(p2)) for A presented by fs: m-1-rk J(I;p1)(p2) for
/// distinct points and m-rk J(I;p)(p) on the diagonal. Exact rank over the
/// rational backend, pivot-thresholded rank over the approximate one.
/// check_preconditions verifies both points satisfy the relations.
template <class S>
int ext1_dim_points(const std::vector<NCPoly>& fs, const Point<S>& p1, const Point<S>& p2,
                    const std::map<std::string, S>& params = {},
                    bool check_preconditions = true);

/// dim_k Ext^1_A(V, W) for finite-dimensional representations: the space of
/// generator tuples (d_1..d_m) in Hom(V,W)^m satisfying the Leibniz-expanded
/// relations, modulo inner derivations d_k = rho_W(x_k) T - T rho_V(x_k).
template <class S>
int ext1_general(const std::vector<NCPoly>& fs, const MatrixRep<S>& V, const MatrixRep<S>& W,
                 const std::map<std::string, S>& params = {},
                 bool check_preconditions = true);

/// The extension relation R = V(D_1(f;u)(v), D_2(f;u)(v)) of a plane model,
/// as two commutative polynomials in (u1,u2,v1,v2) plus the parameters.
struct RelationIdeal {
    ParamList context;  // [u1, u2, v1, v2, params...] (names uniquified)
    std::vector<std::string> u_names;
    std::vector<std::string> v_names;
    CoefPoly g1;
    CoefPoly g2;
};

RelationIdeal relation_ideal(const NCPoly& f);

/// Membership of (p,q) in the relation: both generators vanish at (u,v)=(p,q).
template <class S>
bool ext_pair(const RelationIdeal& ri, const Point<S>& p, const Point<S>& q,
              const std::map<std::string, S>& params = {});

/// Quasipolynomial-extension criterion for A = R[theta;alpha] and modules
/// killed by theta: Ext nonzero iff the base Ext is nonzero or alpha maps the
/// annihilator of V at p to the one of W at q. The ideal condition
/// alpha(m_p) = m_q is decided pointwise as p_i = alpha_i(q) for all i;
/// alpha's components are polynomials over the base-ring variables.
template <class S>
bool ext_quasipoly(const std::vector<CoefPoly>& alpha, const Point<S>& p, const Point<S>& q,
                   bool base_ext_nonzero);

/// For f = g*h: every sampled pair (p1 on C_h, p2 on C_g) must give
/// Ext^1 >= 1. Samples are validated against their curves.
template <class S>
bool factor_ext_check(const NCPoly& g, const NCPoly& h, const std::vector<Point<S>>& samples1,
                      const std::vector<Point<S>>& samples2,
                      const std::map<std::string, S>& params = {});

/// Decides membership of f in the two-sided ideal ([x,y])^2 (or ([x,y]) when
/// square_commutator is false) among elements of degree <= degree_bound, by
/// exact linear algebra over the finite spanning set a*[x,y]*b*[x,y]*c.
bool ideal_membership_bounded(const NCPoly& f, bool square_commutator, int degree_bound);

// ---------------------------------------------------------------------------
// implementation

template <class S>
int ext1_dim_points(const std::vector<NCPoly>& fs, const Point<S>& p1, const Point<S>& p2,
                    const std::map<std::string, S>& params, bool check_preconditions) {
    if (p1.dim() != p2.dim()) throw precondition_error("points of different dimension");
    const int m = static_cast<int>(p1.dim());
    for (const auto& f : fs)
        if (f.generators() != m)
            throw precondition_error("relation generator count does not match the points");
    if (check_preconditions) {
        for (const auto& f : fs) {
            if (!ScalarTraits<S>::is_zero(f.eval_point(p1, params)))
                throw precondition_error("p1 is not a representation of the algebra");
            if (!ScalarTraits<S>::is_zero(f.eval_point(p2, params)))
                throw precondition_error("p2 is not a representation of the algebra");
        }
    }
    int rk = 0;
    if (!fs.empty()) {
        const auto u = SymbolicPoint(fresh_symbols(fs.front(), "u", m));
        Mat<S> j(static_cast<Eigen::Index>(fs.size()), m);
        std::map<std::string, S> assign = params;
        for (int i = 0; i < m; ++i)
            assign[u.names[static_cast<std::size_t>(i)]] = p1.coords[static_cast<std::size_t>(i)];
        for (std::size_t jj = 0; jj < fs.size(); ++jj)
            for (int k = 0; k < m; ++k)
                j(static_cast<Eigen::Index>(jj), k) =
                    nc_derive(fs[jj], k, u).eval_point(p2, assign);
        rk = rank(j);
    }
    return p1 == p2 ? m - rk : m - 1 - rk;
}

template <class S>
int ext1_general(const std::vector<NCPoly>& fs, const MatrixRep<S>& V, const MatrixRep<S>& W,
                 const std::map<std::string, S>& params, bool check_preconditions) {
    if (V.generators() != W.generators())
        throw precondition_error("representations with different generator counts");
    const int m = static_cast<int>(V.generators());
    const Eigen::Index nv = V.dim(), nw = W.dim();
    if (m == 0) throw precondition_error("empty representation");
    if (check_preconditions) {
        for (const auto& f : fs) {
            if (!is_zero_matrix(f.eval_matrix(V, params)))
                throw precondition_error("V is not a representation of the algebra");
            if (!is_zero_matrix(f.eval_matrix(W, params)))
                throw precondition_error("W is not a representation of the algebra");
        }
    }

    const Eigen::Index unknowns = m * nw * nv;
    auto col_of = [&](int k, Eigen::Index i, Eigen::Index j) {
        return k * nw * nv + i * nv + j;
    };

    // Leibniz expansion of each relation: word x_{i1}..x_{id} contributes
    // sum_t rho_W(prefix) d_{i_t} rho_V(suffix).
    Mat<S> constraints =
        Mat<S>::Zero(static_cast<Eigen::Index>(fs.size()) * nw * nv, unknowns);
    for (std::size_t jj = 0; jj < fs.size(); ++jj) {
        const Eigen::Index row0 = static_cast<Eigen::Index>(jj) * nw * nv;
        for (const auto& [w, c] : fs[jj].terms()) {
            const S cv = c.eval(params);
            // prefix products in W, suffix products in V
            std::vector<Mat<S>> pre(w.size() + 1), suf(w.size() + 1);
            pre[0] = identity<S>(nw);
            for (std::size_t t = 0; t < w.size(); ++t)
                pre[t + 1] = (pre[t] * W.mats[static_cast<std::size_t>(w[t])]).eval();
            suf[w.size()] = identity<S>(nv);
            for (std::size_t t = w.size(); t-- > 0;)
                suf[t] = (V.mats[static_cast<std::size_t>(w[t])] * suf[t + 1]).eval();
            for (std::size_t t = 0; t < w.size(); ++t) {
                const int k = w[t];
                const Mat<S>& a = pre[t];
                const Mat<S>& b = suf[t + 1];
                for (Eigen::Index r1 = 0; r1 < nw; ++r1)
                    for (Eigen::Index r2 = 0; r2 < nv; ++r2)
                        for (Eigen::Index i = 0; i < nw; ++i)
                            for (Eigen::Index j = 0; j < nv; ++j)
                                constraints(row0 + r1 * nv + r2, col_of(k, i, j)) +=
                                    cv * a(r1, i) * b(j, r2);
            }
        }
    }

    // inner derivations: T -> (rho_W(x_k) T - T rho_V(x_k))_k
    Mat<S> inner = Mat<S>::Zero(unknowns, nw * nv);
    for (Eigen::Index i0 = 0; i0 < nw; ++i0)
        for (Eigen::Index j0 = 0; j0 < nv; ++j0) {
            const Eigen::Index col = i0 * nv + j0;
            for (int k = 0; k < m; ++k) {
                const Mat<S>& wk = W.mats[static_cast<std::size_t>(k)];
                const Mat<S>& vk = V.mats[static_cast<std::size_t>(k)];
                for (Eigen::Index i = 0; i < nw; ++i)
                    inner(col_of(k, i, j0), col) += wk(i, i0);
                for (Eigen::Index j = 0; j < nv; ++j)
                    inner(col_of(k, i0, j), col) -= vk(j0, j);
            }
        }

    const int kernel = static_cast<int>(unknowns) - rank(constraints);
    const int inner_dim = rank(inner);
    return kernel - inner_dim;
}

template <class S>
bool ext_pair(const RelationIdeal& ri, const Point<S>& p, const Point<S>& q,
              const std::map<std::string, S>& params) {
    if (p.dim() != 2 || q.dim() != 2)
        throw precondition_error("relation-ideal pairs live on plane curves");
    std::map<std::string, S> assign = params;
    for (int i = 0; i < 2; ++i) {
        assign[ri.u_names[static_cast<std::size_t>(i)]] = p.coords[static_cast<std::size_t>(i)];
        assign[ri.v_names[static_cast<std::size_t>(i)]] = q.coords[static_cast<std::size_t>(i)];
    }
    return ScalarTraits<S>::is_zero(ri.g1.eval(assign)) &&
           ScalarTraits<S>::is_zero(ri.g2.eval(assign));
}

template <class S>
bool ext_quasipoly(const std::vector<CoefPoly>& alpha, const Point<S>& p, const Point<S>& q,
                   bool base_ext_nonzero) {
    if (alpha.empty()) throw precondition_error("empty automorphism data");
    const ParamList& vars = alpha.front().params();
    for (const auto& a : alpha)
        if (a.params() != vars) throw context_error("automorphism components over mixed contexts");
    if (alpha.size() != vars.size() || p.dim() != alpha.size() || q.dim() != alpha.size())
        throw precondition_error("automorphism arity does not match the points");
    if (base_ext_nonzero) return true;
    std::map<std::string, S> at_q;
    for (std::size_t i = 0; i < vars.size(); ++i) at_q[vars[i]] = q.coords[i];
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (!ScalarTraits<S>::equal(alpha[i].eval(at_q), p.coords[i])) return false;
    return true;
}

template <class S>
bool factor_ext_check(const NCPoly& g, const NCPoly& h, const std::vector<Point<S>>& samples1,
                      const std::vector<Point<S>>& samples2,
                      const std::map<std::string, S>& params) {
    for (const auto& p : samples1)
        if (!ScalarTraits<S>::is_zero(h.eval_point(p, params)))
            throw precondition_error("sample not on the curve of h");
    for (const auto& p : samples2)
        if (!ScalarTraits<S>::is_zero(g.eval_point(p, params)))
            throw precondition_error("sample not on the curve of g");
    const NCPoly f = g * h;
    for (const auto& p1 : samples1)
        for (const auto& p2 : samples2)
            if (ext1_dim_points<S>({f}, p1, p2, params) < 1) return false;
    return true;
}

}  // namespace ncplane
