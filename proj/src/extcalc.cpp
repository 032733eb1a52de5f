#include "ncplane/extcalc.hpp"

#include <algorithm>

namespace ncplane {

namespace {

int infer_m(const std::vector<NCPoly>& fs, int m) {
    if (!fs.empty()) {
        const int got = fs.front().generators();
        for (const auto& f : fs)
            if (f.generators() != got) throw context_error("relations over mixed algebras");
        if (m >= 0 && m != got)
            throw precondition_error("explicit generator count contradicts the relations");
        return got;
    }
    if (m < 0)
        throw precondition_error("generator count required for an empty presentation");
    return m;
}

}  // namespace

JacobiMatrix jacobi_matrix(const std::vector<NCPoly>& fs, const SymbolicPoint& u, int m) {
    JacobiMatrix out;
    out.m = infer_m(fs, m);
    if (u.dim() != static_cast<std::size_t>(out.m))
        throw precondition_error("base point dimension does not match generator count");
    out.point_symbols = u.names;
    if (fs.empty()) return out;
    for (const auto& f : fs) {
        std::vector<NCPoly> row;
        for (int k = 0; k < out.m; ++k) row.push_back(nc_derive(f, k, u));
        out.entries.push_back(std::move(row));
    }
    out.context = out.entries.front().front().params();
    return out;
}

JacobiMatrix jacobi_matrix(const std::vector<NCPoly>& fs, const Point<Rational>& p, int m) {
    JacobiMatrix out;
    out.m = infer_m(fs, m);
    if (p.dim() != static_cast<std::size_t>(out.m))
        throw precondition_error("base point dimension does not match generator count");
    for (const auto& f : fs) {
        std::vector<NCPoly> row;
        for (int k = 0; k < out.m; ++k) row.push_back(nc_derive(f, k, p));
        out.entries.push_back(std::move(row));
    }
    if (!fs.empty()) out.context = fs.front().params();
    return out;
}

RelationIdeal relation_ideal(const NCPoly& f) {
    if (f.generators() != 2)
        throw precondition_error("the extension relation is defined for plane models (m = 2)");

    RelationIdeal out;
    out.u_names = fresh_symbols(f, "u", 2);
    const SymbolicPoint u(out.u_names);

    const NCPoly d1 = nc_derive(f, 0, u);
    const NCPoly d2 = nc_derive(f, 1, u);

    // v names fresh for the derivative context (which already carries u)
    out.v_names = fresh_symbols(d1, "v", 2);
    const CoefPoly g1 = d1.eval_symbolic(out.v_names);
    const CoefPoly g2 = d2.eval_symbolic(out.v_names);

    // canonical context [u1, u2, v1, v2, params...]
    out.context = {out.u_names[0], out.u_names[1], out.v_names[0], out.v_names[1]};
    for (const auto& p : f.params()) out.context.push_back(p);
    out.g1 = g1.lift_to(out.context);
    out.g2 = g2.lift_to(out.context);
    return out;
}

bool ideal_membership_bounded(const NCPoly& f, bool square_commutator, int degree_bound) {
    if (f.generators() != 2)
        throw precondition_error("bounded ideal membership is implemented for m = 2");
    if (degree_bound < static_cast<int>(f.degree()))
        throw precondition_error("degree bound smaller than the degree of f");
    if (degree_bound > 10)
        throw precondition_error("degree bound beyond the supported desk scale (10)");
    for (const auto& [w, c] : f.terms())
        if (!c.is_constant())
            throw precondition_error("membership oracle requires constant coefficients");

    // index all words over two letters of length <= degree_bound
    std::map<Word, int, DeglexLess> index;
    {
        std::vector<Word> frontier{Word{}};
        index[Word{}] = 0;
        for (int d = 1; d <= degree_bound; ++d) {
            std::vector<Word> next;
            for (const auto& w : frontier)
                for (int letter = 0; letter < 2; ++letter) {
                    Word nw = w;
                    nw.push_back(letter);
                    index.emplace(nw, static_cast<int>(index.size()));
                    next.push_back(std::move(nw));
                }
            frontier = std::move(next);
        }
    }
    const auto width = static_cast<Eigen::Index>(index.size());
    auto to_vec = [&](const NCPoly& g) {
        Vec<Rational> v = Vec<Rational>::Zero(width);
        for (const auto& [w, c] : g.terms()) {
            auto it = index.find(w);
            if (it == index.end())
                throw internal_error("word outside the indexed degree range");
            v(it->second) = c.constant_value();
        }
        return v;
    };

    const ParamList none;
    const NCPoly k = commutator(NCPoly::generator(2, none, 0), NCPoly::generator(2, none, 1));
    NCPoly flat(2, none);
    for (const auto& [w, c] : f.terms())
        flat.add_term(w, CoefPoly::constant(none, c.constant_value()));

    std::vector<Word> all_words;
    all_words.reserve(index.size());
    for (const auto& kv : index) all_words.push_back(kv.first);

    RowSpan<Rational> span(width);
    const int budget = degree_bound - (square_commutator ? 4 : 2);
    if (budget < 0) return false;
    auto word_poly = [&](const Word& w) {
        NCPoly g = NCPoly::constant(2, none, Rational(1));
        for (int letter : w) g *= NCPoly::generator(2, none, letter);
        return g;
    };
    for (const auto& a : all_words) {
        if (static_cast<int>(a.size()) > budget) continue;
        for (const auto& c : all_words) {
            const int used = static_cast<int>(a.size() + c.size());
            if (used > budget) continue;
            if (!square_commutator) {
                span.insert(to_vec(word_poly(a) * k * word_poly(c)));
                continue;
            }
            for (const auto& b : all_words) {
                if (static_cast<int>(b.size()) + used > budget) continue;
                span.insert(to_vec(word_poly(a) * k * word_poly(b) * k * word_poly(c)));
            }
        }
    }
    return span.contains(to_vec(flat));
}

}  // namespace ncplane
