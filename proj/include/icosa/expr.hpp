#pragma once

#include <string>
#include <vector>

#include "icosa/bipoly.hpp"

namespace icosa {

enum class TokenKind { INT, PHI, PHIBAR, X, Y, PLUS, MINUS, STAR, CARET, LPAREN, RPAREN, END };

struct ExprToken {
    TokenKind kind;
    std::string lexeme;
    std::size_t position;  // 0-based byte offset of the first character
};

// Tokenizes an expression; the terminating END token carries position text.size().
// Throws SyntaxError on an unexpected character.
std::vector<ExprToken> tokenize_poly(const std::string& text);

// Recursive-descent parser for polynomials in x, y over Z[phi].
//
// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := signed (('*' signed) | factor)*      (juxtaposition = product)
//   signed := '-' signed | factor
//   factor := atom ('^' INT)?
//   atom   := INT | 'phi' | 'phibar' | 'x' | 'y' | '(' expr ')'
//
// Precedence: '^' > unary '-' > '*'/juxtaposition > binary '+','-', so
// "-x^2" is -(x^2). A juxtaposed factor never starts with '-', keeping
// "x-y" a subtraction. Throws SyntaxError (with 0-based position) on
// malformed input; exponents are capped at 10000.
BiPoly parse_poly(const std::string& text);

}  // namespace icosa
