#include "ncplane/rep2.hpp"

#include <json.hpp>

#include <algorithm>

namespace ncplane {

ParamList trace_context(const ParamList& user_params) {
    ParamList ctx = kTraceVars;
    for (const auto& p : user_params) {
        if (std::find(ctx.begin(), ctx.end(), p) != ctx.end())
            throw context_error("parameter '" + p + "' clashes with a trace variable");
        ctx.push_back(p);
    }
    return ctx;
}

std::string TraceVector::str() const {
    return "(" + c1.str() + ")*XY + (" + c2.str() + ")*X + (" + c3.str() + ")*Y + (" +
           c4.str() + ")*I";
}

TraceVector ch_reduce(const NCPoly& f) {
    if (f.generators() != 2)
        throw precondition_error("Cayley-Hamilton reduction is defined for m = 2");
    const ParamList ctx = trace_context(f.params());
    auto var = [&](const char* n) { return CoefPoly::param(ctx, n); };
    const CoefPoly tX = var("t_X"), dX = var("d_X"), tY = var("t_Y"), dY = var("d_Y"),
                   tXY = var("t_XY");
    const CoefPoly zero(ctx), one = CoefPoly::constant(ctx, Rational(1));

    using State = std::array<CoefPoly, 4>;  // coefficients of XY, X, Y, I
    auto act_x = [&](const State& s) {
        return State{tX * s[0] + s[2], tX * s[1] + s[3], -(dX * s[0]), -(dX * s[1])};
    };
    auto act_y = [&](const State& s) {
        return State{-s[1], dY * s[0] + tY * s[1], tXY * s[0] + tX * s[1] + tY * s[2] + s[3],
                     -(tX * dY * s[0]) + (tXY - tX * tY) * s[1] - dY * s[2]};
    };

    State acc{zero, zero, zero, zero};
    for (const auto& [w, c] : f.terms()) {
        State s{zero, zero, zero, one};
        for (auto it = w.rbegin(); it != w.rend(); ++it) s = (*it == 0) ? act_x(s) : act_y(s);
        const CoefPoly lifted = c.lift_to(ctx);
        for (int i = 0; i < 4; ++i) acc[static_cast<std::size_t>(i)] += lifted * s[static_cast<std::size_t>(i)];
    }
    return TraceVector{acc[0], acc[1], acc[2], acc[3]};
}

CoefPoly formanek2() {
    const ParamList ctx = kTraceVars;
    auto var = [&](const char* n) { return CoefPoly::param(ctx, n); };
    const CoefPoly tX = var("t_X"), dX = var("d_X"), tY = var("t_Y"), dY = var("d_Y"),
                   tXY = var("t_XY");
    const CoefPoly two = CoefPoly::constant(ctx, Rational(2));
    const CoefPoly four = CoefPoly::constant(ctx, Rational(4));
    const CoefPoly quarter = CoefPoly::constant(ctx, Rational(1, 4));
    const CoefPoly a = two * tXY - tX * tY;
    const CoefPoly b = tX * tX - four * dX;
    const CoefPoly c = tY * tY - four * dY;
    return -(quarter * (a * a - b * c));
}

Simp2System simp2_system(const NCPoly& f) {
    Simp2System out;
    out.equations = ch_reduce(f);
    out.formanek = formanek2().lift_to(out.equations.c1.params());
    out.parameters = f.params();
    return out;
}

std::string simp2_to_json(const Simp2System& s) {
    nlohmann::json j;
    j["equations"] = {s.equations.c1.str(), s.equations.c2.str(), s.equations.c3.str(),
                      s.equations.c4.str()};
    j["formanek"] = s.formanek.str();
    j["variables"] = kTraceVars;
    j["parameters"] = s.parameters;
    return j.dump();
}

std::pair<ParamList, std::vector<Mat<CoefPoly>>> generic_matrices(int m, int n,
                                                                  const ParamList& user_params) {
    if (n < 1) throw precondition_error("matrix size must be positive");
    ParamList ctx;
    for (int i = 1; i <= m; ++i)
        for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q)
                ctx.push_back("x" + std::to_string(i) + "_" + std::to_string(p) +
                              std::to_string(q));
    for (const auto& p : user_params) {
        if (std::find(ctx.begin(), ctx.end(), p) != ctx.end())
            throw context_error("parameter '" + p + "' clashes with a generic-matrix variable");
        ctx.push_back(p);
    }
    std::vector<Mat<CoefPoly>> mats;
    for (int i = 0; i < m; ++i) {
        Mat<CoefPoly> mat(n, n);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                mat(p, q) = CoefPoly::param(
                    ctx, "x" + std::to_string(i + 1) + "_" + std::to_string(p + 1) +
                             std::to_string(q + 1));
        mats.push_back(std::move(mat));
    }
    return {ctx, mats};
}

Mat<CoefPoly> eval_generic(const NCPoly& f, const std::vector<Mat<CoefPoly>>& mats,
                           const ParamList& ctx) {
    if (mats.size() != static_cast<std::size_t>(f.generators()))
        throw precondition_error("one matrix per generator required");
    const Eigen::Index n = mats.empty() ? 1 : mats.front().rows();
    Mat<CoefPoly> acc(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) acc(i, j) = CoefPoly(ctx);
    for (const auto& [w, c] : f.terms()) {
        Mat<CoefPoly> prod = identity<CoefPoly>(n);
        for (int letter : w) prod = (prod * mats[static_cast<std::size_t>(letter)]).eval();
        const CoefPoly lifted = c.lift_to(ctx);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) acc(i, j) += lifted * prod(i, j);
    }
    return acc;
}

std::vector<CoefPoly> rep_variety_ideal(const std::vector<NCPoly>& fs, int n) {
    if (fs.empty()) return {};
    const int m = fs.front().generators();
    auto [ctx, mats] = generic_matrices(m, n, fs.front().params());
    std::vector<CoefPoly> gens;
    for (const auto& f : fs) {
        if (f.generators() != m || f.params() != fs.front().params())
            throw context_error("relations over mixed contexts");
        const Mat<CoefPoly> val = eval_generic(f, mats, ctx);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) gens.push_back(val(i, j));
    }
    return gens;
}

}  // namespace ncplane
