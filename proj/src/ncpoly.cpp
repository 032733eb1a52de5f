#include "ncplane/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace ncplane {

std::string gen_name(int m, int i) {
    if (m == 2) return i == 0 ? "x" : "y";
    return "x" + std::to_string(i + 1);
}

NCPoly NCPoly::generator(int m, ParamList params, int i) {
    if (i < 0 || i >= m) throw precondition_error("generator index out of range");
    NCPoly f(m, std::move(params));
    f.terms_[Word{i}] = CoefPoly::constant(f.params_, Rational(1));
    return f;
}

NCPoly NCPoly::constant(int m, ParamList params, CoefPoly c) {
    NCPoly f(m, std::move(params));
    if (!c.is_zero()) f.terms_[Word{}] = c.params() == f.params_ ? c : c.lift_to(f.params_);
    return f;
}

NCPoly NCPoly::constant(int m, ParamList params, Rational c) {
    NCPoly f(m, params);
    return constant(m, std::move(params), CoefPoly::constant(f.params_, std::move(c)));
}

std::size_t NCPoly::degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

const CoefPoly& NCPoly::coefficient(const Word& w) const {
    static const CoefPoly zero;
    auto it = terms_.find(w);
    return it == terms_.end() ? zero : it->second;
}

NCPoly& NCPoly::add_term(const Word& w, const CoefPoly& c) {
    if (w.size() > kMaxWordLength)
        throw precondition_error("word length exceeds the degree cap of " +
                                 std::to_string(kMaxWordLength));
    for (int letter : w)
        if (letter < 0 || letter >= m_)
            throw precondition_error("word letter out of range for this algebra");
    if (c.is_zero()) return *this;
    const CoefPoly lifted = c.params() == params_ ? c : c.lift_to(params_);
    auto [it, fresh] = terms_.emplace(w, lifted);
    if (!fresh) {
        it->second += lifted;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

namespace {
void check_context(const NCPoly& a, const NCPoly& b) {
    if (a.generators() != b.generators())
        throw context_error("mismatched generator counts");
    if (a.params() != b.params())
        throw context_error("mismatched parameter contexts");
}
}  // namespace

NCPoly operator+(const NCPoly& a, const NCPoly& b) {
    check_context(a, b);
    NCPoly out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, c);
    return out;
}

NCPoly operator-(const NCPoly& a, const NCPoly& b) {
    check_context(a, b);
    NCPoly out = a;
    for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
    return out;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    check_context(a, b);
    NCPoly out(a.generators(), a.params());
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add_term(concat(wa, wb), ca * cb);
    return out;
}

NCPoly NCPoly::operator-() const {
    NCPoly out(m_, params_);
    for (const auto& [w, c] : terms_) out.terms_[w] = -c;
    return out;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.m_ == b.m_ && a.params_ == b.params_ && a.terms_ == b.terms_;
}

NCPoly NCPoly::scaled(const CoefPoly& c) const {
    NCPoly out(m_, params_);
    const CoefPoly lifted = c.params() == params_ ? c : c.lift_to(params_);
    for (const auto& [w, cc] : terms_) out.add_term(w, cc * lifted);
    return out;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

NCPoly pow(const NCPoly& base, unsigned exp) {
    NCPoly out = NCPoly::constant(base.generators(), base.params(), Rational(1));
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

CoefPoly NCPoly::abelianize() const {
    std::vector<std::string> names(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) names[static_cast<std::size_t>(i)] = gen_name(m_, i);
    return eval_symbolic(names);
}

CoefPoly NCPoly::eval_symbolic(const std::vector<std::string>& image_names) const {
    if (image_names.size() != static_cast<std::size_t>(m_))
        throw precondition_error("one image symbol per generator required");
    ParamList ctx = image_names;
    for (const auto& p : params_) {
        if (std::find(ctx.begin(), ctx.end(), p) != ctx.end())
            throw context_error("symbol clash between image names and parameters: '" + p + "'");
        ctx.push_back(p);
    }
    CoefPoly out(ctx);
    for (const auto& [w, c] : terms_) {
        ExpVec e(ctx.size(), 0);
        for (int letter : w) e[static_cast<std::size_t>(letter)] += 1;
        const CoefPoly term = CoefPoly::monomial(ctx, e, Rational(1)) * c.lift_to(ctx);
        out += term;
    }
    return out;
}

NCPoly NCPoly::lift(int new_m, const ParamList& new_params,
                    const std::vector<int>& gen_map) const {
    if (new_m < m_ && gen_map.empty())
        throw precondition_error("cannot shrink the generator count");
    NCPoly out(new_m, new_params);
    for (const auto& [w, c] : terms_) {
        Word nw;
        nw.reserve(w.size());
        for (int letter : w)
            nw.push_back(gen_map.empty() ? letter : gen_map.at(static_cast<std::size_t>(letter)));
        out.add_term(nw, c.lift_to(new_params));
    }
    return out;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    // highest degree first; within a degree keep deglex ascending
    std::vector<const std::pair<const Word, CoefPoly>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
        return a->first.size() > b->first.size();
    });

    auto word_text = [&](const Word& w) {
        std::string out;
        std::size_t i = 0;
        while (i < w.size()) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (!out.empty()) out += "*";
            out += gen_name(m_, w[i]);
            if (j - i > 1) out += "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    };

    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const Word& w = t->first;
        const CoefPoly& c = t->second;
        const bool is_const_coef = c.is_constant();
        std::string coef_text;
        bool negative = false;
        if (is_const_coef) {
            Rational v = c.constant_value();
            negative = v.sign() < 0;
            const Rational mag = v.abs();
            if (w.empty() || mag != Rational(1)) coef_text = mag.str();
        } else if (c.terms().size() == 1) {
            // single monomial like d or 2*d: render inline, sign pulled out
            const auto& [e, cv] = *c.terms().begin();
            negative = cv.sign() < 0;
            CoefPoly mono = CoefPoly::monomial(c.params(), e, cv.abs());
            coef_text = mono.str();
        } else {
            coef_text = "(" + c.str() + ")";
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const std::string wt = word_text(w);
        if (coef_text.empty()) {
            os << (wt.empty() ? "1" : wt);
        } else if (wt.empty()) {
            os << coef_text;
        } else {
            os << coef_text << "*" << wt;
        }
    }
    return os.str();
}

}  // namespace ncplane
