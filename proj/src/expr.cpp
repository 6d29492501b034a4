#include "icosa/expr.hpp"

#include <cctype>

namespace icosa {

std::vector<ExprToken> tokenize_poly(const std::string& text) {
    std::vector<ExprToken> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({TokenKind::INT, text.substr(start, i - start), start});
            continue;
        }
        auto word = [&](const char* w) {
            std::size_t n = std::char_traits<char>::length(w);
            if (text.compare(start, n, w) == 0) {
                i = start + n;
                return true;
            }
            return false;
        };
        switch (c) {
            case '+': out.push_back({TokenKind::PLUS, "+", start}); ++i; continue;
            case '-': out.push_back({TokenKind::MINUS, "-", start}); ++i; continue;
            case '*': out.push_back({TokenKind::STAR, "*", start}); ++i; continue;
            case '^': out.push_back({TokenKind::CARET, "^", start}); ++i; continue;
            case '(': out.push_back({TokenKind::LPAREN, "(", start}); ++i; continue;
            case ')': out.push_back({TokenKind::RPAREN, ")", start}); ++i; continue;
            case 'x': out.push_back({TokenKind::X, "x", start}); ++i; continue;
            case 'y': out.push_back({TokenKind::Y, "y", start}); ++i; continue;
            case 'p':
                if (word("phibar")) {
                    out.push_back({TokenKind::PHIBAR, "phibar", start});
                    continue;
                }
                if (word("phi")) {
                    out.push_back({TokenKind::PHI, "phi", start});
                    continue;
                }
                throw SyntaxError("unexpected character 'p'", start);
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'", start);
        }
    }
    out.push_back({TokenKind::END, "", text.size()});
    return out;
}

namespace {

constexpr unsigned long kMaxExponent = 10000;

class Parser {
  public:
    explicit Parser(std::vector<ExprToken> toks) : t_(std::move(toks)) {}

    BiPoly parse() {
        BiPoly out = expr();
        if (peek().kind != TokenKind::END) throw SyntaxError("trailing input", peek().position);
        return out;
    }

  private:
    const ExprToken& peek() const { return t_[pos_]; }
    const ExprToken& advance() { return t_[pos_++]; }
    bool accept(TokenKind k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }

    static bool starts_factor(TokenKind k) {
        switch (k) {
            case TokenKind::INT:
            case TokenKind::PHI:
            case TokenKind::PHIBAR:
            case TokenKind::X:
            case TokenKind::Y:
            case TokenKind::LPAREN: return true;
            default: return false;
        }
    }

    BiPoly expr() {
        BiPoly out = term();
        while (true) {
            if (accept(TokenKind::PLUS))
                out += term();
            else if (accept(TokenKind::MINUS))
                out -= term();
            else
                return out;
        }
    }

    BiPoly term() {
        BiPoly out = signed_factor();
        while (true) {
            if (accept(TokenKind::STAR))
                out = out * signed_factor();
            else if (starts_factor(peek().kind))
                out = out * factor();  // juxtaposition
            else
                return out;
        }
    }

    BiPoly signed_factor() {
        if (accept(TokenKind::MINUS)) return -signed_factor();
        return factor();
    }

    BiPoly factor() {
        BiPoly base = atom();
        if (accept(TokenKind::CARET)) {
            const ExprToken& e = peek();
            if (e.kind != TokenKind::INT) throw SyntaxError("expected integer exponent", e.position);
            advance();
            BigInt big = bigint_from_decimal(e.lexeme);
            if (big > kMaxExponent) throw SyntaxError("exponent too large", e.position);
            return base.pow(big.convert_to<unsigned long>());
        }
        return base;
    }

    BiPoly atom() {
        const ExprToken& t = peek();
        switch (t.kind) {
            case TokenKind::INT:
                advance();
                return BiPoly(GoldenRational(GoldenInt(bigint_from_decimal(t.lexeme), 0)));
            case TokenKind::PHI: advance(); return BiPoly(GoldenRational::phi());
            case TokenKind::PHIBAR: advance(); return BiPoly(GoldenRational::phibar());
            case TokenKind::X: advance(); return BiPoly::variable(Var::X);
            case TokenKind::Y: advance(); return BiPoly::variable(Var::Y);
            case TokenKind::LPAREN: {
                advance();
                BiPoly inner = expr();
                if (!accept(TokenKind::RPAREN))
                    throw SyntaxError("expected ')'", peek().position);
                return inner;
            }
            default: throw SyntaxError("expected a value, variable or '('", t.position);
        }
    }

    std::vector<ExprToken> t_;
    std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(const std::string& text) { return Parser(tokenize_poly(text)).parse(); }

}  // namespace icosa
