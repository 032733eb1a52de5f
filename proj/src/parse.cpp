#include "ncplane/parse.hpp"

#include <algorithm>
#include <cctype>

namespace ncplane {

namespace {

enum class Tok { Name, Int, Plus, Minus, Star, Caret, Slash, LParen, RParen, LBrack, RBrack, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Tok::Name, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Int, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case '/': k = Tok::Slash; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '[': k = Tok::LBrack; break;
            case ']': k = Tok::RBrack; break;
            case ',': k = Tok::Comma; break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, int m, const ParamList& params)
        : tokens_(tokenize(text)), m_(m), params_(params) {}

    NCPoly run() {
        NCPoly f = expr();
        expect(Tok::End, "end of input");
        return f;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    Token take() { return tokens_[at_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++at_;
        return true;
    }
    void expect(Tok k, const std::string& what) {
        if (!accept(k))
            throw parse_error("expected " + what + ", found '" + peek().text + "'", peek().pos);
    }

    NCPoly expr() {
        bool negate = false;
        if (accept(Tok::Minus))
            negate = true;
        else
            accept(Tok::Plus);
        NCPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept(Tok::Plus))
                acc += term();
            else if (accept(Tok::Minus))
                acc -= term();
            else
                return acc;
        }
    }

    NCPoly term() {
        NCPoly acc = factor();
        while (accept(Tok::Star)) acc *= factor();
        return acc;
    }

    NCPoly factor() {
        NCPoly base = atom();
        if (accept(Tok::Caret)) {
            const Token t = peek();
            expect(Tok::Int, "exponent");
            const unsigned long e = std::stoul(t.text);
            if (e > kMaxWordLength)
                throw parse_error("exponent exceeds the degree cap", t.pos);
            return pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    NCPoly atom() {
        const Token t = take();
        switch (t.kind) {
            case Tok::Name:
                return resolve(t);
            case Tok::Int: {
                Rational v(BigInt(t.text));
                if (accept(Tok::Slash)) {
                    const Token d = peek();
                    expect(Tok::Int, "denominator");
                    const BigInt den(d.text);
                    if (den == 0) throw parse_error("zero denominator", d.pos);
                    v = Rational(BigInt(t.text), den);
                }
                return NCPoly::constant(m_, params_, v);
            }
            case Tok::LParen: {
                NCPoly inner = expr();
                expect(Tok::RParen, "')'");
                return inner;
            }
            case Tok::LBrack: {
                NCPoly a = expr();
                expect(Tok::Comma, "','");
                NCPoly b = expr();
                expect(Tok::RBrack, "']'");
                return commutator(a, b);
            }
            default:
                throw parse_error("expected a name, number, '(' or '['", t.pos);
        }
    }

    NCPoly resolve(const Token& t) {
        const std::string& name = t.text;
        if (m_ == 2) {
            if (name == "x") return NCPoly::generator(m_, params_, 0);
            if (name == "y") return NCPoly::generator(m_, params_, 1);
        }
        if (name.size() >= 2 && name[0] == 'x' &&
            std::all_of(name.begin() + 1, name.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            const int idx = std::stoi(name.substr(1));
            if (idx >= 1 && idx <= m_) return NCPoly::generator(m_, params_, idx - 1);
        }
        if (std::find(params_.begin(), params_.end(), name) != params_.end())
            return NCPoly::constant(m_, params_, CoefPoly::param(params_, name));
        throw parse_error("unknown symbol '" + name + "'", t.pos);
    }

    std::vector<Token> tokens_;
    std::size_t at_ = 0;
    int m_;
    const ParamList& params_;
};

}  // namespace

NCPoly nc_parse(const std::string& text, int m, const ParamList& params) {
    if (m < 0) throw precondition_error("negative generator count");
    return Parser(text, m, params).run();
}

std::vector<std::string> scan_names(const std::string& text) {
    std::vector<std::string> out;
    for (const Token& t : tokenize(text))
        if (t.kind == Tok::Name && std::find(out.begin(), out.end(), t.text) == out.end())
            out.push_back(t.text);
    return out;
}

CoefPoly cpoly_parse(const std::string& text, const ParamList& params) {
    return nc_parse(text, 0, params).abelianize();
}

}  // namespace ncplane
