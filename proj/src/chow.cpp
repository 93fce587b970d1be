#include "pncoh/chow.hpp"

#include <functional>
#include <map>

#include "pncoh/errors.hpp"

namespace pncoh {

ChowClass::ChowClass(int n) : n_(n), c_(static_cast<std::size_t>(n + 1), Rational(0)) {
  if (n < 1) throw InputError("Chow ring needs a positive ambient dimension");
}

ChowClass::ChowClass(int n, std::vector<Rational> coefficients) : ChowClass(n) {
  if (coefficients.size() > c_.size()) coefficients.resize(c_.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) c_[i] = coefficients[i];
}

ChowClass ChowClass::one(int n) {
  ChowClass out(n);
  out.c_[0] = 1;
  return out;
}

ChowClass ChowClass::exponential(int n, const Rational& a) {
  ChowClass out(n);
  Rational term = 1;
  for (int j = 0; j <= n; ++j) {
    out.c_[static_cast<std::size_t>(j)] = term;
    term = term * a / (j + 1);
  }
  return out;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
  if (o.n_ != n_) throw InputError("Chow classes on different ambients");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
  if (o.n_ != n_) throw InputError("Chow classes on different ambients");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

ChowClass& ChowClass::operator*=(const ChowClass& o) {
  if (o.n_ != n_) throw InputError("Chow classes on different ambients");
  std::vector<Rational> out(c_.size(), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  return *this;
}

ChowClass& ChowClass::operator*=(const Rational& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

ChowClass ChowClass::inverse() const {
  if (c_[0] == 0) throw InputError("Chow class with zero constant term is not invertible");
  ChowClass out(n_);
  out.c_[0] = 1 / c_[0];
  for (std::size_t k = 1; k < c_.size(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * out.c_[k - j];
    out.c_[k] = -acc / c_[0];
  }
  return out;
}

ChowClass ChowClass::pow(unsigned e) const {
  ChowClass out = one(n_);
  for (unsigned i = 0; i < e; ++i) out *= *this;
  return out;
}

bool ChowClass::is_integral() const {
  for (const auto& v : c_) {
    if (v.get_den() != 1) return false;
  }
  return true;
}

std::string ChowClass::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += c_[i].get_str();
    if (i == 1) out += "*h";
    if (i > 1) out += "*h^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

namespace {

// Laplace expansion along the first row, memoized on the set of used columns.
ChowClass determinant(const std::vector<std::vector<ChowClass>>& m, int n) {
  const std::size_t size = m.size();
  if (size == 0) return ChowClass::one(n);
  std::map<unsigned, ChowClass> memo;
  std::function<ChowClass(std::size_t, unsigned)> minor = [&](std::size_t row,
                                                              unsigned used) -> ChowClass {
    if (row == size) return ChowClass::one(n);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    ChowClass acc(n);
    int sign = 1;
    for (std::size_t col = 0; col < size; ++col) {
      if (used & (1u << col)) continue;
      ChowClass term = m[row][col] * minor(row + 1, used | (1u << col));
      if (sign > 0) {
        acc += term;
      } else {
        acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(0, 0);
}

// ch(S^m Q) = C(n+m, n) - C(n+m-1, n) exp(-h), from 0 -> O(-1) -> O^{n+1} -> Q -> 0.
ChowClass ch_sym_quotient(int n, long m) {
  ChowClass out(n);
  if (m < 0) return out;
  if (m == 0) return ChowClass::one(n);
  out = ChowClass::exponential(n, -1) * Rational(-binomial(n + m - 1, n));
  out[0] += Rational(binomial(n + m, n));
  return out;
}

}  // namespace

ChowClass chern_character(const IrreducibleBundle& b) {
  const int n = b.ambient();
  const Weight& l = b.lambda();
  const std::size_t len = l.depth();
  // Jacobi-Trudi: S_lambda = det[h_{lambda_i - i + j}].
  std::vector<std::vector<ChowClass>> m(len, std::vector<ChowClass>(len, ChowClass(n)));
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      m[i][j] = ch_sym_quotient(n, l[i] - static_cast<long>(i) + static_cast<long>(j));
    }
  }
  return determinant(m, n) * ChowClass::exponential(n, b.twist());
}

ChowClass chern_character(const Decomposition& d) {
  ChowClass out(d.ambient());
  for (const auto& [b, m] : d.terms()) out += chern_character(b) * Rational(m);
  return out;
}

ChowClass chern_character(const BundleExpr& e) { return chern_character(normalize(e)); }

ChowClass chern_class_from_character(const ChowClass& ch) {
  const int n = ch.ambient();
  // Power sums p_k = k! ch_k; Newton: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i.
  std::vector<Rational> p(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) {
    p[static_cast<std::size_t>(k)] = ch[static_cast<std::size_t>(k)] *
                                     Rational(factorial(static_cast<unsigned long>(k)));
  }
  ChowClass c = ChowClass::one(n);
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) {
      Rational term = c[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    c[static_cast<std::size_t>(k)] = acc / k;
  }
  if (!c.is_integral()) {
    throw InternalError("non-integral Chern class " + c.to_string());
  }
  return c;
}

ChowClass total_chern_class(const BundleExpr& e) {
  return chern_class_from_character(chern_character(e));
}

ChowClass todd_class(int n) {
  // f = (1 - exp(-h)) / h = sum_j (-1)^j h^j / (j+1)!.
  ChowClass f(n);
  for (int j = 0; j <= n; ++j) {
    Rational v(1, 1);
    v /= Rational(factorial(static_cast<unsigned long>(j + 1)));
    f[static_cast<std::size_t>(j)] = (j % 2 == 0) ? v : Rational(-v);
  }
  return f.inverse().pow(static_cast<unsigned>(n + 1));
}

BigInt hrr_chi(const Decomposition& d) {
  const int n = d.ambient();
  const ChowClass product = chern_character(d) * todd_class(n);
  const Rational& top = product[static_cast<std::size_t>(n)];
  if (top.get_den() != 1) {
    throw InternalError("Riemann-Roch produced a non-integral Euler characteristic " +
                        top.get_str());
  }
  return top.get_num();
}

BigInt hrr_chi(const BundleExpr& e) { return hrr_chi(normalize(e)); }

PorteousResult porteous_class(const BundleExpr& E, const BundleExpr& G) {
  if (E.ambient() != G.ambient()) throw InputError("porteous: E and G on different ambients");
  const int n = E.ambient();
  const Decomposition dE = normalize(E);
  const Decomposition dG = normalize(G);
  const long e = to_long(dE.rank(), "rank");
  const long g = to_long(dG.rank(), "rank");
  if (e < g) {
    throw InputError("porteous: rank(E) = " + std::to_string(e) + " < rank(G) = " +
                     std::to_string(g));
  }
  const int codim = static_cast<int>(e - g + 1);
  if (codim > n) return {codim, ChowClass(n), 0, true};

  const ChowClass c = chern_class_from_character(chern_character(dG)) *
                      chern_class_from_character(chern_character(dE)).inverse();
  auto entry = [&](long m) {
    ChowClass out(n);
    if (m >= 0 && m <= n) out[static_cast<std::size_t>(m)] = c[static_cast<std::size_t>(m)];
    return out;
  };
  std::vector<std::vector<ChowClass>> m(static_cast<std::size_t>(codim),
                                        std::vector<ChowClass>(static_cast<std::size_t>(codim),
                                                               ChowClass(n)));
  for (int i = 0; i < codim; ++i) {
    for (int j = 0; j < codim; ++j) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(1 + j - i);
    }
  }
  ChowClass cls = determinant(m, n);
  const Rational& top = cls[static_cast<std::size_t>(codim)];
  if (top.get_den() != 1) throw InternalError("non-integral degeneracy degree");
  return {codim, cls, top.get_num(), false};
}

}  // namespace pncoh
