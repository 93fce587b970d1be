#include "pncoh/expression_parser.hpp"

#include <cctype>
#include <regex>

namespace pncoh {

ParseError::ParseError(const std::string& message, std::size_t position,
                       std::set<std::string> expected)
    : InputError(message), position_(position), expected_(std::move(expected)) {}

namespace {

const std::set<std::string> kFactorStart = {"O(", "T", "Omega^", "wedge(", "sym(",
                                            "dual(", "(", "<int>"};

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  BundleExpr parse() {
    BundleExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input", {"+", "(+)", "*", "(x)", "<end>"});
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::set<std::string> expected) {
    std::string full = "parse error at position " + std::to_string(pos_) + ": " + message;
    if (!expected.empty()) {
      full += " (expected one of:";
      for (const auto& t : expected) full += " " + t;
      full += ")";
    }
    throw ParseError(full, pos_, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_char(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect_char(char c, std::set<std::string> expected) {
    if (!peek_char(c)) fail(std::string("expected '") + c + "'", std::move(expected));
    ++pos_;
  }

  // Matches "(" op ")" with optional inner whitespace without consuming on
  // failure.
  bool accept_operator(char op) {
    skip_ws();
    std::size_t p = pos_;
    if (p >= text_.size() || text_[p] != '(') return false;
    ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p >= text_.size() || text_[p] != op) return false;
    ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p >= text_.size() || text_[p] != ')') return false;
    pos_ = p + 1;
    return true;
  }

  bool at_integer() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return (c == '-' || c == '+') && pos_ + 1 < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  long integer(bool allow_sign) {
    skip_ws();
    std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer", {"<int>"});
    }
    const std::string token(text_.substr(start, pos_ - start));
    try {
      return std::stol(token);
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range", {"<int>"});
    }
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  BundleExpr expr() {
    std::vector<BundleExpr::Summand> summands;
    summands.push_back({term(), 1});
    for (;;) {
      if (accept_operator('+')) {
      } else if (peek_char('+')) {
        ++pos_;
      } else {
        break;
      }
      summands.push_back({term(), 1});
    }
    return build([&] { return BundleExpr::sum(std::move(summands)); });
  }

  BundleExpr term() {
    BundleExpr left = factor();
    for (;;) {
      if (accept_operator('x')) {
      } else if (peek_char('*')) {
        ++pos_;
      } else {
        break;
      }
      BundleExpr right = factor();
      left = build([&] { return BundleExpr::tensor(left, right); });
    }
    return left;
  }

  template <class F>
  BundleExpr build(F&& make) {
    try {
      return make();
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& err) {
      fail(err.what(), {});
    }
  }

  BundleExpr factor() {
    skip_ws();
    const std::size_t start = pos_;
    if (at_integer()) {
      long m = integer(false);
      if (m <= 0) {
        pos_ = start;
        fail("multiplicity must be positive", {"<positive int>"});
      }
      expect_char('*', {"*"});
      BundleExpr inner = factor();
      return build([&] { return BundleExpr::multiple(m, inner); });
    }
    if (peek_char('(')) {
      ++pos_;
      BundleExpr inner = expr();
      expect_char(')', {")", "+", "(+)", "*", "(x)"});
      return inner;
    }
    const std::string name = word();
    if (name == "O") {
      expect_char('(', {"("});
      long d = integer(true);
      expect_char(')', {")"});
      return BundleExpr::line(n_, d);
    }
    if (name == "T") return BundleExpr::tangent(n_);
    if (name == "Omega") {
      expect_char('^', {"^"});
      const std::size_t at = pos_;
      long p = integer(false);
      try {
        return BundleExpr::cotangent(n_, static_cast<int>(p));
      } catch (const InputError& err) {
        pos_ = at;
        fail(err.what(), {});
      }
    }
    if (name == "wedge" || name == "sym" || name == "dual") {
      expect_char('(', {"("});
      long k = 0;
      if (name != "dual") {
        k = integer(false);
        expect_char(',', {","});
      }
      BundleExpr inner = expr();
      expect_char(')', {")"});
      if (name == "dual") return BundleExpr::dual(inner);
      return name == "wedge" ? BundleExpr::wedge(static_cast<int>(k), inner)
                             : BundleExpr::sym(static_cast<int>(k), inner);
    }
    pos_ = start;
    fail(name.empty() ? "expected a bundle" : "unknown bundle '" + name + "'", kFactorStart);
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

void collect_warnings(const BundleExpr& e, std::vector<std::string>& out) {
  for (const auto& c : e.children()) collect_warnings(c, out);
  for (const auto& s : e.summands()) collect_warnings(s.expr, out);
  if (e.kind() == BundleExpr::Kind::Wedge) {
    try {
      const BigInt r = rank(e.children()[0]);
      if (BigInt(e.parameter()) > r) {
        out.push_back(e.render() + " is the zero bundle (power " +
                      std::to_string(e.parameter()) + " exceeds rank " + r.get_str() + ")");
      }
    } catch (const std::exception&) {
      // Rank not computable; normalization reports the problem itself.
    }
  }
}

}  // namespace

BundleExpr parse_expression(std::string_view text, std::optional<int> ambient) {
  static const std::regex kAmbient(R"(^([\s\S]*?)\s*\bon\s+P\^\s*([0-9]+)\s*$)");
  std::string body(text);
  std::match_results<std::string::const_iterator> m;
  std::optional<int> from_text;
  if (std::regex_match(body.cbegin(), body.cend(), m, kAmbient)) {
    try {
      from_text = std::stoi(m[2].str());
    } catch (const std::exception&) {
      throw ParseError("ambient dimension out of range", static_cast<std::size_t>(m.position(2)),
                       {"<int>"});
    }
    body = m[1].str();
  }
  if (from_text && ambient && *from_text != *ambient) {
    throw ParseError("ambient P^" + std::to_string(*from_text) + " conflicts with P^" +
                         std::to_string(*ambient),
                     body.size(), {});
  }
  std::optional<int> n = from_text ? from_text : ambient;
  if (!n) throw ParseError("ambient missing (append 'on P^n')", text.size(), {"on P^<int>"});
  if (*n < 1) throw ParseError("ambient dimension must be positive", text.size(), {});
  return Parser(body, *n).parse();
}

std::vector<std::string> expression_warnings(const BundleExpr& e) {
  std::vector<std::string> out;
  collect_warnings(e, out);
  return out;
}

}  // namespace pncoh
