#pragma once

// Text grammar for bundle expressions:
//   expr   := term (('+' | '(+)') term)*
//   term   := factor (('*' | '(x)') factor)*
//   factor := 'O(' int ')' | 'T' | 'Omega^' int | 'wedge(' int ',' expr ')'
//           | 'sym(' int ',' expr ')' | 'dual(' expr ')' | '(' expr ')'
//           | int '*' factor
// optionally followed by the ambient 'on P^' int.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pncoh/bundle.hpp"
#include "pncoh/errors.hpp"

namespace pncoh {

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position, std::set<std::string> expected);
  std::size_t position() const { return position_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::set<std::string> expected_;
};

/// Parses `text`. The ambient comes from a trailing "on P^n" or from
/// `ambient`; when both are present they must agree.
BundleExpr parse_expression(std::string_view text, std::optional<int> ambient = std::nullopt);

/// Non-fatal remarks, e.g. wedge powers above the rank (the zero bundle).
std::vector<std::string> expression_warnings(const BundleExpr& e);

}  // namespace pncoh
