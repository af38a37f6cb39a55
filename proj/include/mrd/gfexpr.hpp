#ifndef MRD_GFEXPR_HPP
#define MRD_GFEXPR_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mrd/rational.hpp"
#include "mrd/series.hpp"

namespace mrd::gf {

/// The expression grammar, as printed by `mrd grammar`.
extern const std::string_view grammar;

enum class TokenKind { integer, variable, op, lparen, rparen, lbracket, rbracket, comma, name, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

/// Splits `input` into tokens, ending with a TokenKind::end token at input.size().
/// Throws ParseError(SyntaxError) on characters outside the alphabet.
std::vector<Token> tokenize(std::string_view input);

enum class NodeKind { constant, variable, add, sub, mul, div, pow, root, call };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable AST node. `value` holds constants, `exponent` pow exponents and root degrees,
/// `name` call names. `position` is the byte offset of the node's first token.
struct Expr {
  NodeKind kind;
  Integer value;
  long exponent = 0;
  std::string name;
  std::vector<ExprPtr> children;
  std::size_t position = 0;
};

ExprPtr constant(Integer value, std::size_t position = 0);
ExprPtr variable(std::size_t position = 0);
ExprPtr binary(NodeKind kind, ExprPtr lhs, ExprPtr rhs, std::size_t position = 0);
ExprPtr power(ExprPtr base, long exponent, std::size_t position = 0);
ExprPtr root(ExprPtr radicand, long degree, std::size_t position = 0);
ExprPtr call(std::string name, std::vector<ExprPtr> args, std::size_t position = 0);

/// Structural equality; positions are ignored.
bool equal(const Expr& a, const Expr& b);

/// Parses an expression. Throws ParseError with kind SyntaxError, UnknownFunction or
/// ArityError and the byte offset of the offending token.
ExprPtr parse(std::string_view input);

/// Text form that parses back to a structurally equal tree.
std::string print(const Expr& e);

/// Debug form, e.g. div(1, sub(1, t)).
std::string dump(const Expr& e);

/// Exact series of the expression to `order`. Intermediate work runs at a higher order when
/// divisions by t or valuation shifts would otherwise lose precision. Series errors are
/// rethrown as MathError annotated with the node position.
RationalSeries eval(const Expr& e, std::size_t order);

inline RationalSeries eval(std::string_view input, std::size_t order) { return eval(*parse(input), order); }

}  // namespace mrd::gf

#endif  // MRD_GFEXPR_HPP
