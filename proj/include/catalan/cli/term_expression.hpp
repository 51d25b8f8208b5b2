#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "catalan/errors.hpp"
#include "catalan/summation/hyper_term.hpp"

namespace catalan {

struct ExprNode {
  enum class Kind { Integer, Symbol, Negate, Add, Sub, Mul, Div, Pow, Call };
  Kind kind = Kind::Integer;
  Integer value;                  // Integer
  std::string name;               // Symbol, Call
  std::vector<ExprNode> children;
  std::size_t position = 0;       // offset into the source; ignored by ==

  friend bool operator==(const ExprNode& a, const ExprNode& b) {
    return a.kind == b.kind && a.value == b.value && a.name == b.name && a.children == b.children;
  }
};

/// Parsed summand together with its symbol context.
struct TermExpression {
  ExprNode root;
  std::string variable;
  std::vector<std::string> parameters;

  /// Parameters followed by the variable.
  std::vector<std::string> symbols() const;
  friend bool operator==(const TermExpression&, const TermExpression&) = default;
};

class ParseError : public UsageError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : UsageError("at position " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A builtin argument that is not an integer-linear combination of the symbols.
class LinearityError : public ParseError {
 public:
  LinearityError(std::size_t position, std::string argument)
      : ParseError(position, "argument is not integer-linear: " + argument), argument_(std::move(argument)) {}
  const std::string& argument() const { return argument_; }

 private:
  std::string argument_;
};

/// Grammar, loosest first: + -, then * /, then unary -, then ^ (right
/// associative, `**` accepted). Builtins: binomial(a, b), factorial(a),
/// catalan(a). The result is also checked to be a product of hypergeometric
/// factors.
TermExpression parse_term(std::string_view src, const std::string& variable,
                          const std::vector<std::string>& parameters);

/// Text that parses back to the same tree.
std::string serialize(const ExprNode& node);
std::string serialize(const TermExpression& expr);

/// Product form over symbols (parameters..., variable).
FactorProduct to_product(const TermExpression& expr);

/// t(s+1)/t(s) for `symbol` (the variable or a parameter), rational in the
/// variable over the parameters.
RationalFunction ratio_of(const TermExpression& expr, const std::string& symbol);

HyperTerm hyper_term_of(const TermExpression& expr);
/// The last parameter plays the recurrence variable.
BivariateHyperTerm bivariate_term_of(const TermExpression& expr);

/// Parses a polynomial expression (no builtins) over `symbols`.
MultiPoly parse_polynomial(std::string_view src, const std::vector<std::string>& symbols);

}  // namespace catalan
