#include "ncplane/coefpoly.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ncplane {

// ---------------------------------------------------------------------------
// Rational

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal", 0);
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw precondition_error("rational with zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const error*>(&e)) throw;
        throw parse_error("bad rational literal '" + text + "'", 0);
    }
}

std::string Rational::str() const {
    std::ostringstream os;
    os << numerator(v_);
    if (denominator(v_) != 1) os << "/" << denominator(v_);
    return os.str();
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (v_ < 0) return std::nullopt;
    const BigInt n = num(), d = den();
    const BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

Rational pow(const Rational& base, unsigned exp) {
    Rational r(1);
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

// ---------------------------------------------------------------------------
// ComplexApprox

std::string ComplexApprox::str() const {
    char buf[64];
    if (im == 0.0) {
        std::snprintf(buf, sizeof buf, "%.12g", re);
        return buf;
    }
    std::string out;
    std::snprintf(buf, sizeof buf, "%.12g", re);
    out = buf;
    std::snprintf(buf, sizeof buf, "%.12g", std::abs(im));
    out += (im < 0 ? "-" : "+");
    out += buf;
    out += "i";
    return out;
}

ComplexApprox ComplexApprox::parse(const std::string& text, double tol) {
    if (text.empty()) throw parse_error("empty scalar literal", 0);
    // rational form is accepted and converted
    if (text.find('i') == std::string::npos && text.find('/') != std::string::npos)
        return ComplexApprox(Rational::parse(text), tol);
    std::size_t ipos = text.find('i');
    auto to_double = [&](const std::string& s, std::size_t at) {
        try {
            std::size_t used = 0;
            double v = std::stod(s, &used);
            if (used != s.size()) throw parse_error("bad numeric literal '" + s + "'", at);
            return v;
        } catch (const std::invalid_argument&) {
            throw parse_error("bad numeric literal '" + s + "'", at);
        }
    };
    if (ipos == std::string::npos) return {to_double(text, 0), 0.0, tol};
    if (ipos + 1 != text.size()) throw parse_error("'i' must end a complex literal", ipos);
    std::string body = text.substr(0, ipos);
    // split at the last +/- that is not an exponent sign and not leading
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        const char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        if (body.empty() || body == "+") return {0.0, 1.0, tol};
        if (body == "-") return {0.0, -1.0, tol};
        return {0.0, to_double(body, 0), tol};
    }
    const std::string re_part = body.substr(0, split);
    std::string im_part = body.substr(split);
    if (im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    return {to_double(re_part, 0), to_double(im_part, split), tol};
}

// ---------------------------------------------------------------------------
// CoefPoly

CoefPoly CoefPoly::constant(ParamList params, Rational c) {
    CoefPoly p(std::move(params));
    if (!c.is_zero()) p.terms_[ExpVec(p.params_.size(), 0)] = std::move(c);
    return p;
}

CoefPoly CoefPoly::param(ParamList params, const std::string& name) {
    CoefPoly p(std::move(params));
    auto it = std::find(p.params_.begin(), p.params_.end(), name);
    if (it == p.params_.end())
        throw context_error("unknown parameter '" + name + "'");
    ExpVec e(p.params_.size(), 0);
    e[static_cast<std::size_t>(it - p.params_.begin())] = 1;
    p.terms_[e] = Rational(1);
    return p;
}

CoefPoly CoefPoly::monomial(ParamList params, ExpVec exps, Rational c) {
    CoefPoly p(std::move(params));
    if (exps.size() != p.params_.size())
        throw context_error("exponent vector length does not match parameter count");
    if (!c.is_zero()) p.terms_[std::move(exps)] = std::move(c);
    return p;
}

bool CoefPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational CoefPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw precondition_error("polynomial is not constant: " + str());
    return terms_.begin()->second;
}

std::uint64_t CoefPoly::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

CoefPoly& CoefPoly::add_term(const ExpVec& e, const Rational& c) {
    if (e.size() != params_.size())
        throw context_error("exponent vector length does not match parameter count");
    if (c.is_zero()) return *this;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

const ParamList& unify_params(const CoefPoly& a, const CoefPoly& b) {
    if (a.params() == b.params()) return a.params();
    if (a.params().empty() && a.is_constant()) return b.params();
    if (b.params().empty() && b.is_constant()) return a.params();
    throw context_error("mismatched parameter contexts");
}

namespace {
ExpVec pad(const ExpVec& e, std::size_t n) {
    if (e.size() == n) return e;
    ExpVec out(n, 0);  // constants over the empty context embed trivially
    return out;
}
}  // namespace

CoefPoly operator+(const CoefPoly& a, const CoefPoly& b) {
    const ParamList& ctx = unify_params(a, b);
    CoefPoly out(ctx);
    for (const auto& [e, c] : a.terms_) out.add_term(pad(e, ctx.size()), c);
    for (const auto& [e, c] : b.terms_) out.add_term(pad(e, ctx.size()), c);
    return out;
}

CoefPoly operator-(const CoefPoly& a, const CoefPoly& b) {
    const ParamList& ctx = unify_params(a, b);
    CoefPoly out(ctx);
    for (const auto& [e, c] : a.terms_) out.add_term(pad(e, ctx.size()), c);
    for (const auto& [e, c] : b.terms_) out.add_term(pad(e, ctx.size()), -c);
    return out;
}

CoefPoly operator*(const CoefPoly& a, const CoefPoly& b) {
    const ParamList& ctx = unify_params(a, b);
    const std::size_t n = ctx.size();
    CoefPoly out(ctx);
    for (const auto& [ea, ca] : a.terms_) {
        const ExpVec pa = pad(ea, n);
        for (const auto& [eb, cb] : b.terms_) {
            const ExpVec pb = pad(eb, n);
            ExpVec e(n);
            for (std::size_t i = 0; i < n; ++i) e[i] = pa[i] + pb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

CoefPoly CoefPoly::operator-() const {
    CoefPoly out(params_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

bool operator==(const CoefPoly& a, const CoefPoly& b) {
    if (a.params_ == b.params_) return a.terms_ == b.terms_;
    // allow comparing constants across the trivial context
    if ((a.params_.empty() && a.is_constant()) || (b.params_.empty() && b.is_constant()))
        return a.is_constant() && b.is_constant() && a.constant_value() == b.constant_value();
    return false;
}

CoefPoly CoefPoly::lift_to(const ParamList& superset) const {
    std::vector<std::size_t> where(params_.size());
    for (std::size_t i = 0; i < params_.size(); ++i) {
        auto it = std::find(superset.begin(), superset.end(), params_[i]);
        if (it == superset.end())
            throw context_error("parameter '" + params_[i] + "' missing from target context");
        where[i] = static_cast<std::size_t>(it - superset.begin());
    }
    CoefPoly out(superset);
    for (const auto& [e, c] : terms_) {
        ExpVec ne(superset.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
        out.add_term(ne, c);
    }
    return out;
}

CoefPoly CoefPoly::subst(const ParamList& target,
                         const std::map<std::string, CoefPoly>& map) const {
    std::vector<CoefPoly> images;
    images.reserve(params_.size());
    for (const auto& name : params_) {
        auto it = map.find(name);
        if (it != map.end()) {
            images.push_back(it->second.params() == target ? it->second
                                                           : it->second.lift_to(target));
        } else if (std::find(target.begin(), target.end(), name) != target.end()) {
            images.push_back(CoefPoly::param(target, name));
        } else {
            throw context_error("parameter '" + name + "' neither mapped nor in target context");
        }
    }
    CoefPoly acc(target);
    for (const auto& [e, c] : terms_) {
        CoefPoly t = CoefPoly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t *= images[i];
        acc += t;
    }
    return acc;
}

std::string CoefPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::string vars;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += params_[i];
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            os << mag.str();
        } else if (mag == Rational(1)) {
            os << vars;
        } else {
            os << mag.str() << "*" << vars;
        }
    }
    return os.str();
}

}  // namespace ncplane
