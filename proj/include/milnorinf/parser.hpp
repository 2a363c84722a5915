#pragma once

// Polynomial text:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | var ('^' nat)? | '(' expr ')'
// Witness mode also accepts '/' between factors (division by anything nonzero).

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milnorinf/poly.hpp"

namespace milnorinf {

struct ParsedPolynomial {
  Polynomial poly;
  std::vector<std::string> variables;
};

/// Variables in first-appearance order unless `vars` is given; then unknown names are errors.
ParsedPolynomial parse_polynomial(std::string_view text, const std::optional<std::vector<std::string>>& vars = {});

/// Rational expression in named parameters, evaluated exactly.
class RationalExpression {
 public:
  static RationalExpression parse(std::string_view text);

  Rational evaluate(const std::map<std::string, Rational>& bindings) const;
  const std::vector<std::string>& variables() const { return variables_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::vector<std::string> variables_;
};

/// Comma-separated variable names, e.g. "x,y,z".
std::vector<std::string> parse_name_list(std::string_view text);

}  // namespace milnorinf
