#include "ncplane/ncdiff.hpp"

#include <algorithm>

namespace ncplane {

std::pair<NCPoly, ParamList> adjoin_params(const NCPoly& f,
                                           const std::vector<std::string>& names) {
    ParamList ctx = f.params();
    for (const auto& n : names) {
        if (std::find(ctx.begin(), ctx.end(), n) != ctx.end())
            throw context_error("symbol '" + n + "' already present in the context");
        for (int i = 0; i < f.generators(); ++i)
            if (n == gen_name(f.generators(), i))
                throw context_error("symbol '" + n + "' clashes with a generator name");
        ctx.push_back(n);
    }
    return {f.lift(f.generators(), ctx), ctx};
}

std::vector<std::string> fresh_symbols(const NCPoly& f, const std::string& stem, int count) {
    auto taken = [&](const std::string& n) {
        if (std::find(f.params().begin(), f.params().end(), n) != f.params().end()) return true;
        for (int i = 0; i < f.generators(); ++i)
            if (n == gen_name(f.generators(), i)) return true;
        return false;
    };
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) {
        std::string n = stem + std::to_string(i);
        while (taken(n) || std::find(out.begin(), out.end(), n) != out.end()) n += "_";
        out.push_back(n);
    }
    return out;
}

namespace {

/// Shared kernel: derivative with the coordinate values of the base point
/// given as coefficient-ring elements (constants or adjoined symbols).
NCPoly derive_with_values(const NCPoly& f, int i, const std::vector<CoefPoly>& values) {
    NCPoly out(f.generators(), f.params());
    for (const auto& [w, c] : f.terms()) {
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (w[t] != i) continue;
            CoefPoly tail = c;
            for (std::size_t s = t + 1; s < w.size(); ++s)
                tail *= values[static_cast<std::size_t>(w[s])];
            out.add_term(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t)), tail);
        }
    }
    return out;
}

CoefPoly value_of(const NCPoly& f, const std::vector<CoefPoly>& values) {
    CoefPoly acc(f.params());
    for (const auto& [w, c] : f.terms()) {
        CoefPoly t = c;
        for (int letter : w) t *= values[static_cast<std::size_t>(letter)];
        acc += t;
    }
    return acc;
}

std::vector<CoefPoly> point_values(const NCPoly& f, const Point<Rational>& p) {
    if (p.dim() != static_cast<std::size_t>(f.generators()))
        throw precondition_error("point dimension does not match generator count");
    std::vector<CoefPoly> values;
    values.reserve(p.dim());
    for (const auto& a : p.coords) values.push_back(CoefPoly::constant(f.params(), a));
    return values;
}

std::pair<NCPoly, std::vector<CoefPoly>> symbolic_values(const NCPoly& f,
                                                         const SymbolicPoint& u) {
    if (u.dim() != static_cast<std::size_t>(f.generators()))
        throw precondition_error("symbolic point dimension does not match generator count");
    auto [lifted, ctx] = adjoin_params(f, u.names);
    std::vector<CoefPoly> values;
    values.reserve(u.names.size());
    for (const auto& n : u.names) values.push_back(CoefPoly::param(ctx, n));
    return {lifted, values};
}

void check_index(const NCPoly& f, int i) {
    if (i < 0 || i >= f.generators())
        throw precondition_error("derivative index out of range");
}

}  // namespace

NCPoly nc_derive(const NCPoly& f, int i, const Point<Rational>& p) {
    check_index(f, i);
    return derive_with_values(f, i, point_values(f, p));
}

NCPoly nc_derive(const NCPoly& f, int i, const SymbolicPoint& u) {
    check_index(f, i);
    auto [lifted, values] = symbolic_values(f, u);
    return derive_with_values(lifted, i, values);
}

LeftDecomposition left_decompose(const NCPoly& f, const Point<Rational>& p) {
    const auto values = point_values(f, p);
    LeftDecomposition out;
    out.constant = value_of(f, values);
    for (int k = 0; k < f.generators(); ++k)
        out.components.push_back(derive_with_values(f, k, values));
    return out;
}

LeftDecomposition left_decompose(const NCPoly& f, const SymbolicPoint& u) {
    auto [lifted, values] = symbolic_values(f, u);
    LeftDecomposition out;
    out.constant = value_of(lifted, values);
    for (int k = 0; k < f.generators(); ++k)
        out.components.push_back(derive_with_values(lifted, k, values));
    return out;
}

// ---------------------------------------------------------------------------
// Taylor calculus on 3m letters

namespace {

/// One application of D_{x_i} on the 3m-letter algebra: every occurrence of
/// the letter x_i splits the word into (prefix) v_i (suffix with x_j -> u_j);
/// v,u letters pass through as constants.
NCPoly taylor_step(const NCPoly& g, int i, int m) {
    NCPoly out(g.generators(), g.params());
    for (const auto& [w, c] : g.terms()) {
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (w[t] != i) continue;
            Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
            nw.push_back(m + i);  // v_i
            for (std::size_t s = t + 1; s < w.size(); ++s)
                nw.push_back(w[s] < m ? 2 * m + w[s] : w[s]);  // trailing x_j -> u_j
            out.add_term(nw, c);
        }
    }
    return out;
}

/// Lift f from m letters into the 3m-letter algebra (x block).
NCPoly to_3m(const NCPoly& f) {
    return f.lift(3 * f.generators(), f.params());
}

/// Substitute the v letters by 1 and map the x and u letters through the
/// supplied coefficient values (empty entries keep the letter).
NCPoly substitute_letters(const NCPoly& g, int m,
                          const std::vector<std::optional<CoefPoly>>& images,
                          int out_m, const std::vector<int>& letter_map,
                          const ParamList& out_ctx) {
    NCPoly out(out_m, out_ctx);
    for (const auto& [w, c] : g.terms()) {
        Word nw;
        CoefPoly coef = c.lift_to(out_ctx);
        for (int letter : w) {
            if (letter >= m && letter < 2 * m) continue;  // v_i := 1
            const auto& img = images[static_cast<std::size_t>(letter)];
            if (img.has_value())
                coef *= *img;  // central image commutes past the remaining word
            else
                nw.push_back(letter_map[static_cast<std::size_t>(letter)]);
        }
        out.add_term(nw, coef);
    }
    return out;
}

}  // namespace

NCPoly taylor_D(const NCPoly& f, const std::vector<int>& indices) {
    if (indices.empty()) throw precondition_error("empty Taylor operator index list");
    const int m = f.generators();
    for (int i : indices) check_index(f, i);
    NCPoly g = to_3m(f);
    for (int i : indices) g = taylor_step(g, i, m);
    return g;
}

NCPoly taylor_first_order(const NCPoly& f, int k, const SymbolicPoint& u) {
    check_index(f, k);
    const int m = f.generators();
    auto [lifted, ctx] = adjoin_params(f, u.names);
    NCPoly g = taylor_step(to_3m(lifted), k, m);
    // x letters stay letters; u letters become the central symbols
    std::vector<std::optional<CoefPoly>> images(static_cast<std::size_t>(3 * m));
    std::vector<int> letter_map(static_cast<std::size_t>(3 * m), -1);
    for (int i = 0; i < m; ++i) {
        letter_map[static_cast<std::size_t>(i)] = i;
        images[static_cast<std::size_t>(2 * m + i)] =
            CoefPoly::param(ctx, u.names[static_cast<std::size_t>(i)]);
    }
    return substitute_letters(g, m, images, m, letter_map, ctx);
}

NCPoly TaylorExpansion::sum(int m) const {
    NCPoly acc = NCPoly::constant(m, context, constant);
    for (const auto& t : terms) acc += t.term;
    return acc;
}

TaylorExpansion taylor_expand_centered(const NCPoly& f, const SymbolicPoint& u) {
    const int m = f.generators();
    if (u.dim() != static_cast<std::size_t>(m))
        throw precondition_error("center dimension does not match generator count");
    auto [lifted, ctx] = adjoin_params(f, u.names);

    // images for evaluating a 3m-letter operator value at (x,v,u) = (u,1,u)
    std::vector<std::optional<CoefPoly>> at_center(static_cast<std::size_t>(3 * m));
    std::vector<int> no_letters(static_cast<std::size_t>(3 * m), -1);
    for (int i = 0; i < m; ++i) {
        const CoefPoly ui = CoefPoly::param(ctx, u.names[static_cast<std::size_t>(i)]);
        at_center[static_cast<std::size_t>(i)] = ui;
        at_center[static_cast<std::size_t>(2 * m + i)] = ui;
    }
    auto coefficient_at_center = [&](const NCPoly& g) {
        return substitute_letters(g, m, at_center, m, no_letters, ctx)
            .coefficient(Word{});
    };

    TaylorExpansion out;
    out.context = ctx;
    out.center = u.names;
    {
        LeftDecomposition dec = left_decompose(f, u);  // reuse for f(u)
        out.constant = dec.constant;
    }

    // factors (x_i - u_i) in k[u]<x>
    std::vector<NCPoly> factor;
    for (int i = 0; i < m; ++i) {
        NCPoly xi = NCPoly::generator(m, ctx, i);
        factor.push_back(
            xi - NCPoly::constant(m, ctx,
                                  CoefPoly::param(ctx, u.names[static_cast<std::size_t>(i)])));
    }

    // depth-first over operator words, pruning once the operator value dies
    std::vector<int> stack;
    auto walk = [&](auto&& self, const NCPoly& value) -> void {
        if (stack.size() >= kMaxWordLength) return;
        for (int i = 0; i < m; ++i) {
            const NCPoly next = taylor_step(value, i, m);
            if (next.is_zero()) continue;
            stack.push_back(i);
            const CoefPoly coef = coefficient_at_center(next);
            if (!coef.is_zero()) {
                // product (x_{i_n}-u_{i_n}) ... (x_{i_1}-u_{i_1}), last index leftmost
                NCPoly prod = NCPoly::constant(m, ctx, Rational(1));
                for (auto it = stack.rbegin(); it != stack.rend(); ++it)
                    prod *= factor[static_cast<std::size_t>(*it)];
                out.terms.push_back({stack, coef, prod.scaled(coef)});
            }
            self(self, next);
            stack.pop_back();
        }
    };
    walk(walk, to_3m(lifted));
    return out;
}

bool taylor_additive_check(const NCPoly& f) {
    const int m = f.generators();
    const ParamList& ctx = f.params();
    const int big = 3 * m;

    // f(u+v) inside the 3m-letter algebra (x block unused on both sides)
    NCPoly lhs(big, ctx);
    for (const auto& [w, c] : f.terms()) {
        NCPoly prod = NCPoly::constant(big, ctx, Rational(1));
        for (int letter : w) {
            NCPoly uv = NCPoly::generator(big, ctx, 2 * m + letter) +
                        NCPoly::generator(big, ctx, m + letter);
            prod *= uv;
        }
        prod = prod.scaled(c);
        lhs += prod;
    }

    // f(u): x letters renamed to u letters
    std::vector<int> x_to_u(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) x_to_u[static_cast<std::size_t>(i)] = 2 * m + i;
    NCPoly rhs = f.lift(big, ctx, x_to_u);

    // all operator words, substituting x -> u in each value D(f; u, v, u)
    std::vector<int> all_to_u(static_cast<std::size_t>(big));
    for (int i = 0; i < big; ++i) all_to_u[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < m; ++i) all_to_u[static_cast<std::size_t>(i)] = 2 * m + i;

    auto walk = [&](auto&& self, const NCPoly& value, std::size_t depth) -> void {
        if (depth >= kMaxWordLength) return;
        for (int i = 0; i < m; ++i) {
            const NCPoly next = taylor_step(value, i, m);
            if (next.is_zero()) continue;
            rhs += next.lift(big, ctx, all_to_u);
            self(self, next, depth + 1);
        }
    };
    walk(walk, to_3m(f), 0);
    return lhs == rhs;
}

}  // namespace ncplane
