#include "catalan/cli/term_expression.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace catalan {

namespace {

struct Token {
  enum class Kind { Integer, Ident, Op, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t position = 0;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Kind::Integer, std::string(src.substr(start, i - start)), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Token::Kind::Ident, std::string(src.substr(start, i - start)), start});
    } else if (c == '*' && i + 1 < src.size() && src[i + 1] == '*') {
      out.push_back({Token::Kind::Op, "^", i});
      i += 2;
    } else if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Op, std::string(1, c), i});
      ++i;
    } else {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::End, "", src.size()});
  return out;
}

bool is_builtin(const std::string& name) {
  return name == "binomial" || name == "factorial" || name == "catalan";
}

std::size_t builtin_arity(const std::string& name) { return name == "binomial" ? 2 : 1; }

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  ExprNode parse() {
    ExprNode root = expression();
    if (peek().kind != Token::Kind::End) fail("expected operator or end of input");
    return root;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_op(const char* op) const { return peek().kind == Token::Kind::Op && peek().text == op; }
  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    const std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.position, expected + ", found " + found);
  }
  void expect(const char* op) {
    if (!at_op(op)) fail(std::string("expected '") + op + "'");
    ++pos_;
  }

  static ExprNode binary(ExprNode::Kind kind, ExprNode a, ExprNode b) {
    ExprNode n;
    n.kind = kind;
    n.position = a.position;
    n.children.push_back(std::move(a));
    n.children.push_back(std::move(b));
    return n;
  }

  ExprNode expression() {
    ExprNode left = product();
    while (at_op("+") || at_op("-")) {
      const Token op = tokens_[pos_++];
      left = binary(op.text == "+" ? ExprNode::Kind::Add : ExprNode::Kind::Sub, std::move(left), product());
    }
    return left;
  }

  ExprNode product() {
    ExprNode left = unary();
    while (at_op("*") || at_op("/")) {
      const Token op = tokens_[pos_++];
      left = binary(op.text == "*" ? ExprNode::Kind::Mul : ExprNode::Kind::Div, std::move(left), unary());
    }
    return left;
  }

  ExprNode unary() {
    if (at_op("-")) {
      ExprNode n;
      n.kind = ExprNode::Kind::Negate;
      n.position = tokens_[pos_++].position;
      n.children.push_back(unary());
      return n;
    }
    return power();
  }

  ExprNode power() {
    ExprNode base = primary();
    if (at_op("^")) {
      ++pos_;
      return binary(ExprNode::Kind::Pow, std::move(base), unary());
    }
    return base;
  }

  ExprNode primary() {
    const Token t = peek();
    if (t.kind == Token::Kind::Integer) {
      ++pos_;
      ExprNode n;
      n.kind = ExprNode::Kind::Integer;
      n.value = Integer(t.text);
      n.position = t.position;
      return n;
    }
    if (t.kind == Token::Kind::Ident) {
      ++pos_;
      ExprNode n;
      n.name = t.text;
      n.position = t.position;
      if (at_op("(")) {
        ++pos_;
        n.kind = ExprNode::Kind::Call;
        n.children.push_back(expression());
        while (at_op(",")) {
          ++pos_;
          n.children.push_back(expression());
        }
        expect(")");
      } else {
        n.kind = ExprNode::Kind::Symbol;
      }
      return n;
    }
    if (at_op("(")) {
      ++pos_;
      ExprNode inner = expression();
      expect(")");
      return inner;
    }
    fail("expected integer, symbol, builtin call or '('");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::optional<std::size_t> symbol_index(const std::vector<std::string>& symbols, const std::string& name) {
  const auto it = std::find(symbols.begin(), symbols.end(), name);
  if (it == symbols.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols.begin());
}

bool is_constant_form(const LinearForm& f) {
  return std::all_of(f.coefficients.begin(), f.coefficients.end(), [](const Integer& c) { return c == 0; });
}

LinearForm scale_form(LinearForm f, const Integer& c) {
  f.constant *= c;
  for (auto& x : f.coefficients) x *= c;
  return f;
}

LinearForm add_forms(LinearForm a, const LinearForm& b, int sign) {
  a.constant += sign * b.constant;
  if (a.coefficients.size() < b.coefficients.size()) a.coefficients.resize(b.coefficients.size());
  for (std::size_t i = 0; i < b.coefficients.size(); ++i) a.coefficients[i] += sign * b.coefficients[i];
  return a;
}

std::optional<Integer> integer_literal(const ExprNode& n);

std::optional<LinearForm> linear_form(const ExprNode& n, const std::vector<std::string>& symbols) {
  using K = ExprNode::Kind;
  if (const auto c = integer_literal(n)) return LinearForm{*c, {}};
  switch (n.kind) {
    case K::Integer:
      return LinearForm{n.value, {}};
    case K::Symbol: {
      LinearForm f;
      f.coefficients.assign(symbols.size(), Integer(0));
      f.coefficients[*symbol_index(symbols, n.name)] = 1;
      return f;
    }
    case K::Negate: {
      auto f = linear_form(n.children[0], symbols);
      if (!f) return std::nullopt;
      return scale_form(*f, -1);
    }
    case K::Add:
    case K::Sub: {
      auto a = linear_form(n.children[0], symbols);
      auto b = linear_form(n.children[1], symbols);
      if (!a || !b) return std::nullopt;
      return add_forms(*a, *b, n.kind == K::Add ? 1 : -1);
    }
    case K::Mul: {
      auto a = linear_form(n.children[0], symbols);
      auto b = linear_form(n.children[1], symbols);
      if (!a || !b) return std::nullopt;
      if (is_constant_form(*a)) return scale_form(*b, a->constant);
      if (is_constant_form(*b)) return scale_form(*a, b->constant);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

// Integer value of a subtree built from literals with + - * and nonnegative powers.
std::optional<Integer> integer_literal(const ExprNode& n) {
  using K = ExprNode::Kind;
  auto sub = [&](std::size_t i) { return integer_literal(n.children[i]); };
  switch (n.kind) {
    case K::Integer:
      return n.value;
    case K::Negate: {
      const auto a = sub(0);
      if (!a) return std::nullopt;
      return Integer(-*a);
    }
    case K::Add:
    case K::Sub:
    case K::Mul: {
      const auto a = sub(0);
      const auto b = sub(1);
      if (!a || !b) return std::nullopt;
      if (n.kind == K::Add) return Integer(*a + *b);
      if (n.kind == K::Sub) return Integer(*a - *b);
      return Integer(*a * *b);
    }
    case K::Pow: {
      const auto a = sub(0);
      const auto b = sub(1);
      if (!a || !b || *b < 0 || *b > 64) return std::nullopt;
      Integer out;
      mpz_pow_ui(out.get_mpz_t(), a->get_mpz_t(), b->get_ui());
      return out;
    }
    default:
      return std::nullopt;
  }
}

std::optional<MultiPoly> polynomial(const ExprNode& n, const std::vector<std::string>& symbols) {
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::Integer:
      return MultiPoly(Rational(n.value));
    case K::Symbol:
      return MultiPoly::variable(*symbol_index(symbols, n.name));
    case K::Negate: {
      auto p = polynomial(n.children[0], symbols);
      if (!p) return std::nullopt;
      return -*p;
    }
    case K::Add:
    case K::Sub:
    case K::Mul:
    case K::Div: {
      auto a = polynomial(n.children[0], symbols);
      auto b = polynomial(n.children[1], symbols);
      if (!a || !b) return std::nullopt;
      if (n.kind == K::Add) return *a + *b;
      if (n.kind == K::Sub) return *a - *b;
      if (n.kind == K::Mul) return *a * *b;
      if (!b->is_constant() || b->is_zero()) return std::nullopt;
      return a->scaled(Rational(1) / b->constant_value());
    }
    case K::Pow: {
      const auto e = integer_literal(n.children[1]);
      if (!e || *e < 0 || *e > 1000) return std::nullopt;
      auto base = polynomial(n.children[0], symbols);
      if (!base) return std::nullopt;
      return base->pow(static_cast<unsigned>(e->get_ui()));
    }
    case K::Call:
      return std::nullopt;
  }
  return std::nullopt;
}

void validate(const ExprNode& n, const std::vector<std::string>& symbols) {
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::Integer:
      return;
    case K::Symbol:
      if (is_builtin(n.name)) throw ParseError(n.position, "builtin '" + n.name + "' needs arguments");
      if (!symbol_index(symbols, n.name)) throw ParseError(n.position, "unknown symbol '" + n.name + "'");
      return;
    case K::Call:
      if (!is_builtin(n.name)) {
        throw ParseError(n.position, "unknown function '" + n.name + "'; expected binomial, factorial or catalan");
      }
      if (n.children.size() != builtin_arity(n.name)) {
        throw ParseError(n.position, n.name + " takes " + std::to_string(builtin_arity(n.name)) + " argument(s)");
      }
      for (const ExprNode& arg : n.children) {
        validate(arg, symbols);
        if (!linear_form(arg, symbols)) throw LinearityError(arg.position, serialize(arg));
      }
      return;
    case K::Pow: {
      validate(n.children[0], symbols);
      validate(n.children[1], symbols);
      if (integer_literal(n.children[1])) return;
      if (!integer_literal(n.children[0])) {
        throw ParseError(n.position, "symbolic exponent needs an integer base such as (-1)");
      }
      if (!linear_form(n.children[1], symbols)) throw LinearityError(n.children[1].position, serialize(n.children[1]));
      return;
    }
    default:
      for (const ExprNode& c : n.children) validate(c, symbols);
  }
}

struct ProductBuilder {
  const std::vector<std::string>& symbols;
  Rational constant = 1;
  std::vector<Factor> factors;

  static Rational rational_pow(const Rational& base, long e) {
    Rational out = 1;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= base;
    return e < 0 ? Rational(1) / out : out;
  }

  void add(const ExprNode& n, long e) {
    using K = ExprNode::Kind;
    if (e == 0) return;
    if (auto p = polynomial(n, symbols)) {
      if (p->is_constant()) {
        const Rational c = p->constant_value();
        if (c == 0) throw ParseError(n.position, e < 0 ? "division by zero" : "term is identically zero");
        constant *= rational_pow(c, e);
      } else {
        Factor f;
        f.poly = *p;
        f.exponent = static_cast<int>(e);
        factors.push_back(std::move(f));
      }
      return;
    }
    switch (n.kind) {
      case K::Negate:
        if (e % 2 != 0) constant = -constant;
        add(n.children[0], e);
        return;
      case K::Mul:
        add(n.children[0], e);
        add(n.children[1], e);
        return;
      case K::Div:
        add(n.children[0], e);
        add(n.children[1], -e);
        return;
      case K::Pow: {
        if (const auto p = integer_literal(n.children[1])) {
          if (!p->fits_slong_p() || std::abs(p->get_si()) > 1000) throw ParseError(n.position, "exponent too large");
          add(n.children[0], e * p->get_si());
          return;
        }
        Factor f;
        f.kind = Factor::Kind::Power;
        f.base = Rational(*integer_literal(n.children[0]));
        if (f.base == 0) throw ParseError(n.position, "zero base with symbolic exponent");
        f.arg = *linear_form(n.children[1], symbols);
        f.exponent = static_cast<int>(e);
        factors.push_back(std::move(f));
        return;
      }
      case K::Call: {
        Factor f;
        f.kind = n.name == "binomial"    ? Factor::Kind::Binomial
                 : n.name == "factorial" ? Factor::Kind::Factorial
                                         : Factor::Kind::Catalan;
        f.arg = *linear_form(n.children[0], symbols);
        if (n.children.size() > 1) f.lower = *linear_form(n.children[1], symbols);
        f.exponent = static_cast<int>(e);
        factors.push_back(std::move(f));
        return;
      }
      default:
        throw ParseError(n.position, "a sum involving builtins or symbolic powers is not a hypergeometric product");
    }
  }
};

std::string binary_op(ExprNode::Kind kind) {
  switch (kind) {
    case ExprNode::Kind::Add: return " + ";
    case ExprNode::Kind::Sub: return " - ";
    case ExprNode::Kind::Mul: return "*";
    case ExprNode::Kind::Div: return "/";
    default: return "^";
  }
}

}  // namespace

std::vector<std::string> TermExpression::symbols() const {
  std::vector<std::string> out = parameters;
  out.push_back(variable);
  return out;
}

TermExpression parse_term(std::string_view src, const std::string& variable,
                          const std::vector<std::string>& parameters) {
  TermExpression expr{Parser(src).parse(), variable, parameters};
  const auto symbols = expr.symbols();
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (is_builtin(symbols[i])) throw UsageError("symbol name clashes with a builtin: " + symbols[i]);
    if (std::count(symbols.begin(), symbols.end(), symbols[i]) > 1) {
      throw UsageError("symbol listed twice: " + symbols[i]);
    }
  }
  validate(expr.root, symbols);
  to_product(expr);
  return expr;
}

std::string serialize(const ExprNode& n) {
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::Integer:
      return n.value.get_str();
    case K::Symbol:
      return n.name;
    case K::Negate:
      return "(-" + serialize(n.children[0]) + ")";
    case K::Call: {
      std::string out = n.name + "(";
      for (std::size_t i = 0; i < n.children.size(); ++i) out += (i ? ", " : "") + serialize(n.children[i]);
      return out + ")";
    }
    default:
      return "(" + serialize(n.children[0]) + binary_op(n.kind) + serialize(n.children[1]) + ")";
  }
}

std::string serialize(const TermExpression& expr) { return serialize(expr.root); }

FactorProduct to_product(const TermExpression& expr) {
  const auto symbols = expr.symbols();
  ProductBuilder builder{symbols, 1, {}};
  builder.add(expr.root, 1);
  return FactorProduct(symbols, builder.constant, std::move(builder.factors));
}

RationalFunction ratio_of(const TermExpression& expr, const std::string& symbol) {
  const auto symbols = expr.symbols();
  const auto index = symbol_index(symbols, symbol);
  if (!index) throw UsageError("unknown symbol: " + symbol);
  return to_product(expr).shift_ratio(*index);
}

HyperTerm hyper_term_of(const TermExpression& expr) { return HyperTerm::from_product(to_product(expr)); }

BivariateHyperTerm bivariate_term_of(const TermExpression& expr) {
  if (expr.parameters.empty()) throw UsageError("a recurrence variable is required");
  return BivariateHyperTerm::from_product(to_product(expr));
}

MultiPoly parse_polynomial(std::string_view src, const std::vector<std::string>& symbols) {
  const ExprNode root = Parser(src).parse();
  validate(root, symbols);
  auto p = polynomial(root, symbols);
  if (!p) throw ParseError(root.position, "expected a polynomial");
  return *p;
}

}  // namespace catalan
