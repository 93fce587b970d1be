#include "pncoh/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pncoh/errors.hpp"

namespace pncoh {

bool DegRevLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = exponent_degree(a);
  const int db = exponent_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

int exponent_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  return monomial(nvars, Exponent(static_cast<std::size_t>(nvars), 0), c);
}

Polynomial Polynomial::monomial(int nvars, Exponent e, const Rational& c) {
  if (e.size() != static_cast<std::size_t>(nvars)) throw InputError("exponent length mismatch");
  Polynomial p(nvars);
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return monomial(nvars, std::move(e));
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, exponent_degree(e));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = exponent_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (exponent_degree(e) != d) return false;
  }
  return true;
}

bool Polynomial::is_constant() const { return terms_.empty() || total_degree() == 0; }

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InputError("polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InputError("polynomials in different rings");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (o.nvars_ != nvars_) throw InputError("polynomials in different rings");
  Polynomial out(nvars_);
  Exponent e(static_cast<std::size_t>(nvars_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

void Polynomial::add_scaled_shifted(const Polynomial& g, const Exponent& shift, const Rational& c) {
  Exponent e(static_cast<std::size_t>(nvars_));
  for (const auto& [eg, cg] : g.terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = eg[i] + shift[i];
    add_term(e, c * cg);
  }
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out(nvars_);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e.at(v) == 0) continue;
    Exponent d = e;
    d[v] -= 1;
    out.add_term(d, c * e[v]);
  }
  return out;
}

Polynomial Polynomial::dehomogenize(int var) const {
  const auto v = static_cast<std::size_t>(var);
  if (v >= static_cast<std::size_t>(nvars_)) throw InputError("dehomogenize: bad variable");
  Polynomial out(nvars_ - 1);
  for (const auto& [e, c] : terms_) {
    Exponent d;
    d.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i != v) d.push_back(e[i]);
    }
    out.add_term(d, c);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial out = *this;
  out *= 1 / leading_coefficient();
  return out;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  BigInt num_gcd = 0;
  BigInt den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    num_gcd = gcd(num_gcd, c.get_num());
    den_lcm = lcm(den_lcm, c.get_den());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading_coefficient() < 0) scale = -scale;
  Polynomial out = *this;
  out *= scale;
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

  Polynomial parse() {
    Polynomial out(nvars_);
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term() * Rational(sign);
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw InputError("polynomial parse error at position " + std::to_string(pos_) + ": " + msg +
                     " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial term() {
    Rational coeff = 1;
    Exponent e(static_cast<std::size_t>(nvars_), 0);
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) fail("expected a factor");
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Rational value(BigInt(digits()), BigInt(1));
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
          ++pos_;
          BigInt den(digits());
          if (den == 0) fail("zero denominator");
          value /= Rational(den);
        }
        coeff *= value;
      } else if (c == 'x') {
        ++pos_;
        const int index = std::stoi(digits());
        if (index >= nvars_) fail("variable x" + std::to_string(index) + " out of range");
        int power = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          power = std::stoi(digits());
        }
        e[static_cast<std::size_t>(index)] += power;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return Polynomial::monomial(nvars_, std::move(e), coeff);
  }

  std::string_view text_;
  int nvars_;
  std::size_t pos_ = 0;
};

void fill_monomials(int nvars, int remaining, std::size_t index, Exponent& current,
                    std::vector<Exponent>& out) {
  if (index + 1 == static_cast<std::size_t>(nvars)) {
    current[index] = remaining;
    out.push_back(current);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    current[index] = a;
    fill_monomials(nvars, remaining - a, index + 1, current, out);
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars) {
  return PolyParser(text, nvars).parse();
}

std::vector<Exponent> monomials_of_degree(int nvars, int degree) {
  std::vector<Exponent> out;
  if (nvars <= 0 || degree < 0) return out;
  Exponent current(static_cast<std::size_t>(nvars), 0);
  fill_monomials(nvars, degree, 0, current, out);
  std::sort(out.begin(), out.end(), DegRevLexGreater());
  return out;
}

}  // namespace pncoh
