#pragma once

#include <utility>
#include <vector>

#include "ncplane/ncpoly.hpp"

namespace ncplane {

/// Reinterpret f over its context with the given central symbols appended as
/// parameters. The names must be fresh (distinct from generators and existing
/// parameters).
std::pair<NCPoly, ParamList> adjoin_params(const NCPoly& f, const std::vector<std::string>& names);

/// `count` central symbols stem1..stemN guaranteed fresh for f's context.
std::vector<std::string> fresh_symbols(const NCPoly& f, const std::string& stem, int count);

/// The left i-th partial derivative D_i(f;p): linear in f, D_i(const) = 0,
/// D_i(x_j) = delta_ij, and D_i(fg;p) = f D_i(g;p) + D_i(f;p) g(p).
NCPoly nc_derive(const NCPoly& f, int i, const Point<Rational>& p);

/// Symbolic-point variant: the derivative lives in k[u]<x> with the point
/// coordinates adjoined as central parameters.
NCPoly nc_derive(const NCPoly& f, int i, const SymbolicPoint& u);

/// f = constant + sum_k components[k] * (x_k - a_k), exactly.
struct LeftDecomposition {
    CoefPoly constant;               // f(p)
    std::vector<NCPoly> components;  // components[k] = D_k(f;p)
};

LeftDecomposition left_decompose(const NCPoly& f, const Point<Rational>& p);
LeftDecomposition left_decompose(const NCPoly& f, const SymbolicPoint& u);

/// Iterated Taylor operator on the free algebra in 3m letters
/// (x_1..x_m, v_1..v_m, u_1..u_m mapped to letter indices i, m+i, 2m+i).
/// Base rules: D_{x_i}(x_j) = delta_ij v_i and
/// D_{x_i}(m x_j) = D_{x_i}(m) u_j + delta_ij m v_i, with the v,u letters
/// treated as constants during iteration. indices[0] is applied first.
NCPoly taylor_D(const NCPoly& f, const std::vector<int>& indices);

/// One expansion term: the operator multi-index (application order), the
/// scalar coefficient D_{...}(f;u,u) and the assembled coefficient *
/// (x_{i_n}-u_{i_n})...(x_{i_1}-u_{i_1}) contribution.
struct TaylorTerm {
    std::vector<int> indices;
    CoefPoly coefficient;
    NCPoly term;
};

struct TaylorExpansion {
    CoefPoly constant;  // f(u)
    std::vector<TaylorTerm> terms;
    ParamList context;  // f's parameters with u appended
    std::vector<std::string> center;

    /// constant + sum of all terms, as an element of k[u]<x>.
    NCPoly sum(int m) const;
};

/// Finite noncommutative Taylor expansion around the central point u;
/// summing all terms reproduces f exactly.
TaylorExpansion taylor_expand_centered(const NCPoly& f, const SymbolicPoint& u);

/// First-order operator with x left in place: D_{x_k}(f; x, u), i.e. the v
/// letters specialized to 1. Coincides with nc_derive at the symbolic point.
NCPoly taylor_first_order(const NCPoly& f, int k, const SymbolicPoint& u);

/// Checks f(u+v) = f(u) + sum over all operator words of
/// D_{x_{i_n}},...,x_{i_1}}(f; u,v,u) in the free algebra on the 2m letters
/// u,v, by exact expansion of both sides.
bool taylor_additive_check(const NCPoly& f);

}  // namespace ncplane
