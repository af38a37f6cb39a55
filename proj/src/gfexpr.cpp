#include "mrd/gfexpr.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

#include "mrd/error.hpp"
#include "mrd/identities.hpp"

namespace mrd::gf {

const std::string_view grammar =
    "expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ; "
    "factor := atom ('^' '-'? int)? ; atom := int | 't' | '(' expr ')' | '-' factor | name '(' args ')' | "
    "'sqrt' ('[' int ']')? '(' expr ')'";

namespace {

[[noreturn]] void syntax_error(std::size_t position, const std::string& message,
                               std::vector<std::string> expected) {
  throw ParseError(ErrorKind::SyntaxError, position, message, std::move(expected));
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Builtin {
  std::size_t arity;
};

const std::map<std::string, Builtin, std::less<>>& registry() {
  static const std::map<std::string, Builtin, std::less<>> r{
      {"catalan", {0}}, {"schroeder_small", {0}}, {"schroeder_large", {0}},
      {"fuss", {1}},    {"revert", {1}},          {"subst", {2}},
  };
  return r;
}

std::string describe(const Token& t) {
  if (t.kind == TokenKind::end) return "end of input";
  return "'" + t.text + "'";
}

}  // namespace

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < input.size()) {
    const char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
      out.push_back({TokenKind::integer, std::string(input.substr(start, i - start)), start});
    } else if (is_name_start(c)) {
      while (i < input.size() && is_name_char(input[i])) ++i;
      std::string text(input.substr(start, i - start));
      out.push_back({text == "t" ? TokenKind::variable : TokenKind::name, std::move(text), start});
    } else {
      TokenKind kind;
      switch (c) {
        case '+': case '-': case '*': case '/': case '^': kind = TokenKind::op; break;
        case '(': kind = TokenKind::lparen; break;
        case ')': kind = TokenKind::rparen; break;
        case '[': kind = TokenKind::lbracket; break;
        case ']': kind = TokenKind::rbracket; break;
        case ',': kind = TokenKind::comma; break;
        default:
          syntax_error(start, std::string("unexpected character '") + c + "'",
                       {"integer", "'t'", "name", "operator", "'('", "')'", "'['", "']'", "','"});
      }
      out.push_back({kind, std::string(1, c), start});
      ++i;
    }
  }
  out.push_back({TokenKind::end, "", input.size()});
  return out;
}

ExprPtr constant(Integer value, std::size_t position) {
  if (value < 0) throw std::invalid_argument("expression constants are nonnegative integers");
  return std::make_shared<const Expr>(Expr{NodeKind::constant, std::move(value), 0, {}, {}, position});
}

ExprPtr variable(std::size_t position) {
  return std::make_shared<const Expr>(Expr{NodeKind::variable, Integer(0), 0, {}, {}, position});
}

ExprPtr binary(NodeKind kind, ExprPtr lhs, ExprPtr rhs, std::size_t position) {
  return std::make_shared<const Expr>(
      Expr{kind, Integer(0), 0, {}, {std::move(lhs), std::move(rhs)}, position});
}

ExprPtr power(ExprPtr base, long exponent, std::size_t position) {
  return std::make_shared<const Expr>(Expr{NodeKind::pow, Integer(0), exponent, {}, {std::move(base)}, position});
}

ExprPtr root(ExprPtr radicand, long degree, std::size_t position) {
  if (degree < 2) throw std::invalid_argument("root degree must be at least 2");
  return std::make_shared<const Expr>(Expr{NodeKind::root, Integer(0), degree, {}, {std::move(radicand)}, position});
}

ExprPtr call(std::string name, std::vector<ExprPtr> args, std::size_t position) {
  return std::make_shared<const Expr>(Expr{NodeKind::call, Integer(0), 0, std::move(name), std::move(args), position});
}

bool equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.exponent != b.exponent || a.name != b.name ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!equal(*a.children[i], *b.children[i])) return false;
  return true;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view input) : tokens_(tokenize(input)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().kind != TokenKind::end)
      syntax_error(peek().position, "unexpected " + describe(peek()),
                   {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool at_op(char c) const { return peek().kind == TokenKind::op && peek().text[0] == c; }

  const Token& expect(TokenKind kind, const char* what) {
    if (peek().kind != kind) syntax_error(peek().position, "expected " + std::string(what) + ", found " + describe(peek()), {what});
    return next();
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (at_op('+') || at_op('-')) {
      const Token& op = next();
      ExprPtr rhs = term();
      lhs = binary(op.text[0] == '+' ? NodeKind::add : NodeKind::sub, lhs, rhs, lhs->position);
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (at_op('*') || at_op('/')) {
      const Token& op = next();
      ExprPtr rhs = factor();
      lhs = binary(op.text[0] == '*' ? NodeKind::mul : NodeKind::div, lhs, rhs, lhs->position);
    }
    return lhs;
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (!at_op('^')) return base;
    next();
    bool negative = false;
    if (at_op('-')) {
      next();
      negative = true;
    }
    const Token& exp = expect(TokenKind::integer, "integer");
    long value = 0;
    try {
      value = std::stol(exp.text);
    } catch (const std::out_of_range&) {
      syntax_error(exp.position, "exponent out of range", {"integer"});
    }
    return power(base, negative ? -value : value, base->position);
  }

  ExprPtr atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::integer:
        next();
        return constant(Integer(tok.text), tok.position);
      case TokenKind::variable:
        next();
        return variable(tok.position);
      case TokenKind::lparen: {
        next();
        ExprPtr inner = expr();
        expect(TokenKind::rparen, "')'");
        return inner;
      }
      case TokenKind::op:
        if (tok.text[0] == '-') {
          // unary minus: 0 - x, binding looser than '^'
          next();
          ExprPtr operand = factor();
          return binary(NodeKind::sub, constant(Integer(0), tok.position), operand, tok.position);
        }
        break;
      case TokenKind::name:
        return tok.text == "sqrt" ? sqrt_call() : function_call();
      default:
        break;
    }
    syntax_error(tok.position, "unexpected " + describe(tok), {"integer", "'t'", "'('", "'-'", "name"});
  }

  ExprPtr sqrt_call() {
    const Token& name = next();
    long degree = 2;
    if (peek().kind == TokenKind::lbracket) {
      next();
      const Token& d = expect(TokenKind::integer, "integer");
      try {
        degree = std::stol(d.text);
      } catch (const std::out_of_range&) {
        degree = 0;
      }
      if (degree < 2) syntax_error(d.position, "root degree must be at least 2", {"integer >= 2"});
      expect(TokenKind::rbracket, "']'");
    }
    expect(TokenKind::lparen, "'('");
    ExprPtr inner = expr();
    expect(TokenKind::rparen, "')'");
    return root(inner, degree, name.position);
  }

  ExprPtr function_call() {
    const Token& name = next();
    const auto it = registry().find(name.text);
    if (it == registry().end())
      throw ParseError(ErrorKind::UnknownFunction, name.position, "unknown function '" + name.text + "'",
                       {"catalan", "schroeder_small", "schroeder_large", "fuss", "revert", "subst", "sqrt"});
    expect(TokenKind::lparen, "'('");
    std::vector<ExprPtr> args;
    if (peek().kind != TokenKind::rparen) {
      while (true) {
        if (name.text == "fuss") {
          const Token& lit = expect(TokenKind::integer, "integer");
          args.push_back(constant(Integer(lit.text), lit.position));
        } else {
          args.push_back(expr());
        }
        if (peek().kind != TokenKind::comma) break;
        next();
      }
    }
    if (peek().kind != TokenKind::rparen)
      syntax_error(peek().position, "expected ',' or ')', found " + describe(peek()), {"','", "')'"});
    next();
    if (args.size() != it->second.arity)
      throw ParseError(ErrorKind::ArityError, name.position,
                       name.text + " takes " + std::to_string(it->second.arity) + " argument(s), got " +
                           std::to_string(args.size()),
                       {});
    return call(name.text, std::move(args), name.position);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// precedence levels: 1 sums, 2 products, 3 powers, 4 atoms
void print_to(const Expr& e, int context, std::string& out) {
  auto wrap = [&](int level, auto&& body) {
    const bool parens = context > level;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (e.kind) {
    case NodeKind::constant: out += e.value.str(); return;
    case NodeKind::variable: out += 't'; return;
    case NodeKind::add:
    case NodeKind::sub:
      wrap(1, [&] {
        print_to(*e.children[0], 1, out);
        out += e.kind == NodeKind::add ? '+' : '-';
        print_to(*e.children[1], 2, out);
      });
      return;
    case NodeKind::mul:
    case NodeKind::div:
      wrap(2, [&] {
        print_to(*e.children[0], 2, out);
        out += e.kind == NodeKind::mul ? '*' : '/';
        print_to(*e.children[1], 3, out);
      });
      return;
    case NodeKind::pow:
      wrap(3, [&] {
        print_to(*e.children[0], 4, out);
        out += '^';
        out += std::to_string(e.exponent);
      });
      return;
    case NodeKind::root:
      out += "sqrt[" + std::to_string(e.exponent) + "](";
      print_to(*e.children[0], 0, out);
      out += ')';
      return;
    case NodeKind::call:
      out += e.name + "(";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += ',';
        print_to(*e.children[i], 0, out);
      }
      out += ')';
      return;
  }
}

const char* node_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::add: return "add";
    case NodeKind::sub: return "sub";
    case NodeKind::mul: return "mul";
    case NodeKind::div: return "div";
    default: return "";
  }
}

}  // namespace

ExprPtr parse(std::string_view input) { return Parser(input).parse_all(); }

std::string print(const Expr& e) {
  std::string out;
  print_to(e, 0, out);
  return out;
}

std::string dump(const Expr& e) {
  switch (e.kind) {
    case NodeKind::constant: return e.value.str();
    case NodeKind::variable: return "t";
    case NodeKind::pow: return "pow(" + dump(*e.children[0]) + ", " + std::to_string(e.exponent) + ")";
    case NodeKind::root: return "root(" + dump(*e.children[0]) + ", " + std::to_string(e.exponent) + ")";
    case NodeKind::call: {
      std::string out = e.name + "(";
      for (std::size_t i = 0; i < e.children.size(); ++i) out += (i ? ", " : "") + dump(*e.children[i]);
      return out + ")";
    }
    default:
      return std::string(node_name(e.kind)) + "(" + dump(*e.children[0]) + ", " + dump(*e.children[1]) + ")";
  }
}

namespace {

RationalSeries large_schroeder(std::size_t order) {
  // r = 1 + t r + t r^2
  const RationalSeries one = RationalSeries::constant(Rational(1), order);
  RationalSeries r = one;
  for (std::size_t i = 0; i < order; ++i) r = one + shift_up(r + r * r, 1).truncated(order);
  return r;
}

RationalSeries eval_at(const Expr& e, std::size_t work) {
  std::vector<RationalSeries> args;
  if (e.kind != NodeKind::call || e.name != "fuss")
    for (const auto& c : e.children) args.push_back(eval_at(*c, work));
  try {
    switch (e.kind) {
      case NodeKind::constant: return RationalSeries::constant(Rational(e.value), work);
      case NodeKind::variable: return RationalSeries::variable(work);
      case NodeKind::add: return args[0] + args[1];
      case NodeKind::sub: return args[0] - args[1];
      case NodeKind::mul: return args[0] * args[1];
      case NodeKind::div: return divide(args[0], args[1]);
      case NodeKind::pow: return pow(args[0], e.exponent);
      case NodeKind::root: return ell_root(args[0], static_cast<unsigned>(e.exponent));
      case NodeKind::call:
        if (e.name == "catalan") return fuss(2, work);
        if (e.name == "schroeder_large") return large_schroeder(work);
        if (e.name == "schroeder_small") return (large_schroeder(work) + Rational(1)) / Rational(2);
        if (e.name == "fuss") {
          const Integer& l = e.children.at(0)->value;
          if (l < 1 || l > 64) raise(ErrorKind::InvalidSpec, "fuss(ell) needs 1 <= ell <= 64");
          return fuss(l.convert_to<std::size_t>(), work);
        }
        if (e.name == "revert") return comp_inverse(args[0]);
        if (e.name == "subst") return compose(args[0], args[1]);
        raise(ErrorKind::InvalidSpec, "unknown function '" + e.name + "'");
    }
  } catch (const ParseError&) {
    throw;
  } catch (const MathError& err) {
    const std::string what = err.what();
    if (what.find(" (at byte ") != std::string::npos) throw;
    throw MathError(err.kind(), what + " (at byte " + std::to_string(e.position) + ")");
  }
  return RationalSeries(work);
}

}  // namespace

RationalSeries eval(const Expr& e, std::size_t order) {
  const std::size_t cap = 4 * order + 64;
  std::size_t work = order;
  while (true) {
    RationalSeries s = eval_at(e, work);
    if (s.order() >= order) return s.truncated(order);
    if (work >= cap)
      raise(ErrorKind::InsufficientTruncation,
            "expression loses more than " + std::to_string(cap - order) + " orders of precision");
    work = std::min(cap, work + (order - s.order()) + 1);
  }
}

}  // namespace mrd::gf
