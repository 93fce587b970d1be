#include "pncoh/bundle.hpp"

#include <functional>
#include <unordered_map>

#include "pncoh/errors.hpp"

namespace pncoh {

struct BundleExpr::Node {
  Kind kind;
  int n;
  long param = 0;
  std::vector<BundleExpr> children;
  std::vector<Summand> summands;
};

namespace {

void require_ambient(int n) {
  if (n < 1) throw InputError("ambient dimension must be positive, got " + std::to_string(n));
}

void require_same_ambient(int a, int b) {
  if (a != b) {
    throw InputError("subexpressions live on different ambient spaces P^" + std::to_string(a) +
                     " and P^" + std::to_string(b));
  }
}

}  // namespace

BundleExpr BundleExpr::line(int n, long degree) {
  require_ambient(n);
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Line, n, degree, {}, {}}));
}

BundleExpr BundleExpr::tangent(int n) {
  require_ambient(n);
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Tangent, n, 0, {}, {}}));
}

BundleExpr BundleExpr::cotangent(int n, int p) {
  require_ambient(n);
  if (p < 1 || p > n) {
    throw InputError("Omega^" + std::to_string(p) + " requires 1 <= p <= " + std::to_string(n));
  }
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Cotangent, n, p, {}, {}}));
}

BundleExpr BundleExpr::dual(const BundleExpr& child) {
  return BundleExpr(
      std::make_shared<const Node>(Node{Kind::Dual, child.ambient(), 0, {child}, {}}));
}

BundleExpr BundleExpr::tensor(const BundleExpr& left, const BundleExpr& right) {
  require_same_ambient(left.ambient(), right.ambient());
  return BundleExpr(
      std::make_shared<const Node>(Node{Kind::Tensor, left.ambient(), 0, {left, right}, {}}));
}

BundleExpr BundleExpr::sum(std::vector<Summand> summands) {
  std::vector<Summand> flat;
  for (auto& s : summands) {
    if (s.multiplicity < 0) throw InputError("direct-sum multiplicity must be positive");
    if (s.multiplicity == 0) continue;
    // m*(k*E) is (mk)*E.
    if (s.expr.kind() == Kind::Sum && s.expr.summands().size() == 1) {
      const auto& inner = s.expr.summands().front();
      flat.push_back({inner.expr, inner.multiplicity * s.multiplicity});
    } else {
      flat.push_back(std::move(s));
    }
  }
  if (flat.empty()) throw InputError("direct sum needs at least one summand");
  for (const auto& s : flat) require_same_ambient(flat.front().expr.ambient(), s.expr.ambient());
  if (flat.size() == 1 && flat.front().multiplicity == 1) return flat.front().expr;
  const int n = flat.front().expr.ambient();
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Sum, n, 0, {}, std::move(flat)}));
}

BundleExpr BundleExpr::wedge(int k, const BundleExpr& child) {
  if (k < 0) throw InputError("wedge power must be nonnegative");
  return BundleExpr(
      std::make_shared<const Node>(Node{Kind::Wedge, child.ambient(), k, {child}, {}}));
}

BundleExpr BundleExpr::sym(int k, const BundleExpr& child) {
  if (k < 0) throw InputError("symmetric power must be nonnegative");
  return BundleExpr(
      std::make_shared<const Node>(Node{Kind::Sym, child.ambient(), k, {child}, {}}));
}

BundleExpr BundleExpr::direct_sum(const BundleExpr& left, const BundleExpr& right) {
  return sum({{left, 1}, {right, 1}});
}

BundleExpr BundleExpr::twist(const BundleExpr& e, long d) {
  return tensor(e, line(e.ambient(), d));
}

BundleExpr BundleExpr::multiple(long m, const BundleExpr& e) { return sum({{e, m}}); }

BundleExpr::Kind BundleExpr::kind() const { return node_->kind; }
int BundleExpr::ambient() const { return node_->n; }
long BundleExpr::parameter() const { return node_->param; }
const std::vector<BundleExpr>& BundleExpr::children() const { return node_->children; }
const std::vector<BundleExpr::Summand>& BundleExpr::summands() const { return node_->summands; }

bool operator==(const BundleExpr& a, const BundleExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.ambient() != b.ambient() || a.parameter() != b.parameter()) {
    return false;
  }
  if (a.children() != b.children()) return false;
  const auto& sa = a.summands();
  const auto& sb = b.summands();
  if (sa.size() != sb.size()) return false;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i].multiplicity != sb[i].multiplicity || !(sa[i].expr == sb[i].expr)) return false;
  }
  return true;
}

namespace {

// 0 = sum, 1 = tensor product, 2 = atom.
int precedence(const BundleExpr& e) {
  switch (e.kind()) {
    case BundleExpr::Kind::Sum:
      return e.summands().size() == 1 ? 2 : 0;
    case BundleExpr::Kind::Tensor:
      return 1;
    default:
      return 2;
  }
}

std::string render_at(const BundleExpr& e, int level);

std::string render_node(const BundleExpr& e) {
  using Kind = BundleExpr::Kind;
  switch (e.kind()) {
    case Kind::Line:
      return "O(" + std::to_string(e.parameter()) + ")";
    case Kind::Tangent:
      return "T";
    case Kind::Cotangent:
      return "Omega^" + std::to_string(e.parameter());
    case Kind::Dual:
      return "dual(" + render_at(e.children()[0], 0) + ")";
    case Kind::Wedge:
      return "wedge(" + std::to_string(e.parameter()) + "," + render_at(e.children()[0], 0) + ")";
    case Kind::Sym:
      return "sym(" + std::to_string(e.parameter()) + "," + render_at(e.children()[0], 0) + ")";
    case Kind::Tensor:
      return render_at(e.children()[0], 1) + " (x) " + render_at(e.children()[1], 2);
    case Kind::Sum: {
      std::string out;
      for (const auto& s : e.summands()) {
        if (!out.empty()) out += " (+) ";
        if (s.multiplicity == 1) {
          out += render_at(s.expr, 1);
        } else {
          out += std::to_string(s.multiplicity) + "*" + render_at(s.expr, 2);
        }
      }
      return out;
    }
  }
  return {};
}

std::string render_at(const BundleExpr& e, int level) {
  std::string body = render_node(e);
  return precedence(e) < level ? "(" + body + ")" : body;
}

}  // namespace

std::string BundleExpr::render() const { return render_at(*this, 0); }

// ---------------------------------------------------------------------------

IrreducibleBundle::IrreducibleBundle(int n, const Weight& lambda, long twist) : n_(n) {
  require_ambient(n);
  if (lambda.length() != static_cast<std::size_t>(n)) {
    throw InputError("irreducible bundle on P^" + std::to_string(n) + " needs a weight of length " +
                     std::to_string(n) + ", got " + lambda.to_string());
  }
  const long shift = lambda[lambda.length() - 1];
  std::vector<long> entries(lambda.entries().begin(), lambda.entries().end());
  for (auto& v : entries) v -= shift;
  lambda_ = Weight(std::move(entries));
  twist_ = twist + shift;
}

BigInt IrreducibleBundle::rank() const { return weyl_dim(lambda_, static_cast<std::size_t>(n_)); }

IrreducibleBundle IrreducibleBundle::dual() const {
  const std::size_t len = lambda_.length();
  const long top = lambda_[0];
  std::vector<long> entries(len);
  for (std::size_t i = 0; i < len; ++i) entries[i] = top - lambda_[len - 1 - i];
  return IrreducibleBundle(n_, Weight(std::move(entries)), -top - twist_);
}

std::string IrreducibleBundle::to_string() const {
  if (is_line()) return "O(" + std::to_string(twist_) + ")";
  return "S" + lambda_.to_string() + "Q(" + std::to_string(twist_) + ")";
}

// ---------------------------------------------------------------------------

Decomposition::Decomposition(int n, const IrreducibleBundle& b, BigInt multiplicity) : n_(n) {
  add(b, multiplicity);
}

void Decomposition::add(const IrreducibleBundle& b, const BigInt& multiplicity) {
  if (b.ambient() != n_) throw InputError("decomposition ambient mismatch");
  if (multiplicity == 0) return;
  auto& slot = terms_[b];
  slot += multiplicity;
  if (slot == 0) terms_.erase(b);
}

Decomposition& Decomposition::operator+=(const Decomposition& other) {
  for (const auto& [b, m] : other.terms_) add(b, m);
  return *this;
}

Decomposition Decomposition::scaled(const BigInt& factor) const {
  Decomposition out(n_);
  for (const auto& [b, m] : terms_) out.add(b, m * factor);
  return out;
}

Decomposition Decomposition::dual() const {
  Decomposition out(n_);
  for (const auto& [b, m] : terms_) out.add(b.dual(), m);
  return out;
}

Decomposition Decomposition::twisted(long d) const {
  Decomposition out(n_);
  for (const auto& [b, m] : terms_) out.add(b.twisted(d), m);
  return out;
}

BigInt Decomposition::rank() const {
  BigInt total = 0;
  for (const auto& [b, m] : terms_) total += m * b.rank();
  return total;
}

std::string Decomposition::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, m] : terms_) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += m.get_str() + "*";
    out += b.to_string();
  }
  return out;
}

namespace {

using WeightPair = std::pair<Weight, Weight>;

struct WeightPairHash {
  std::size_t operator()(const WeightPair& p) const noexcept {
    std::size_t h = 0;
    for (long v : p.first.entries()) h = h * 1000003u + std::hash<long>()(v);
    for (long v : p.second.entries()) h = h * 998244353u + std::hash<long>()(v + 17);
    return h;
  }
};

const LRExpansion& cached_lr(const Weight& a, const Weight& b) {
  thread_local std::unordered_map<WeightPair, LRExpansion, WeightPairHash> cache;
  WeightPair key = a <= b ? WeightPair{a, b} : WeightPair{b, a};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, lr_product(key.first, key.second)).first;
  return it->second;
}

}  // namespace

Decomposition tensor(const Decomposition& a, const Decomposition& b) {
  if (a.ambient() != b.ambient()) throw InputError("tensor: ambient mismatch");
  const int n = a.ambient();
  Decomposition out(n);
  for (const auto& [x, mx] : a.terms()) {
    for (const auto& [y, my] : b.terms()) {
      const long d = x.twist() + y.twist();
      if (x.is_line() || y.is_line()) {
        out.add(IrreducibleBundle(n, x.is_line() ? y.lambda() : x.lambda(), d), mx * my);
        continue;
      }
      for (const auto& term : cached_lr(x.lambda(), y.lambda())) {
        out.add(IrreducibleBundle(n, term.weight, d), mx * my * term.multiplicity);
      }
    }
  }
  return out;
}

namespace {

enum class FundamentalType { Line, Quotient, CoQuotient, Other };

FundamentalType classify(const IrreducibleBundle& b) {
  const Weight& l = b.lambda();
  const std::size_t n = l.length();
  if (l.is_zero()) return FundamentalType::Line;
  bool quotient = l[0] == 1;
  for (std::size_t i = 1; i < n; ++i) quotient = quotient && l[i] == 0;
  if (quotient) return FundamentalType::Quotient;
  bool coquotient = l[n - 1] == 0;
  for (std::size_t i = 0; i + 1 < n; ++i) coquotient = coquotient && l[i] == 1;
  if (coquotient) return FundamentalType::CoQuotient;
  return FundamentalType::Other;
}

Weight column_weight(std::size_t n, std::size_t height, long value = 1) {
  std::vector<long> entries(n, 0);
  for (std::size_t i = 0; i < height && i < n; ++i) entries[i] = value;
  return Weight(std::move(entries));
}

long det_degree(const IrreducibleBundle& b) {
  const BigInt dim = b.rank();
  const BigInt scaled = BigInt(b.lambda().total()) * dim;
  if (scaled % b.ambient() != 0) throw InternalError("non-integral determinant degree");
  return to_long(scaled / b.ambient() + BigInt(b.twist()) * dim, "determinant degree");
}

[[noreturn]] void unsupported(const char* op, long k, const IrreducibleBundle& b) {
  throw UnsupportedPlethysm(std::string(op) + "^" + std::to_string(k) + " of summand " +
                                b.to_string() + " is outside the supported plethysm scope",
                            b.to_string());
}

}  // namespace

Decomposition wedge_power(const IrreducibleBundle& b, long k) {
  const int n = b.ambient();
  if (k < 0) throw InputError("wedge power must be nonnegative");
  const BigInt r = b.rank();
  if (k == 0) return Decomposition(n, IrreducibleBundle::line(n, 0));
  if (BigInt(k) > r) return Decomposition(n);
  if (k == 1) return Decomposition(n, b);
  if (BigInt(k) == r) return Decomposition(n, IrreducibleBundle::line(n, det_degree(b)));
  if (BigInt(k) == r - 1) {
    // Lambda^{r-1} V = V* (x) det V.
    return Decomposition(n, b.dual().twisted(det_degree(b)));
  }
  const auto un = static_cast<std::size_t>(n);
  switch (classify(b)) {
    case FundamentalType::Quotient:
      return Decomposition(n, IrreducibleBundle(n, column_weight(un, static_cast<std::size_t>(k)),
                                                k * b.twist()));
    case FundamentalType::CoQuotient:
      // Lambda^k(Q*(1)) = Lambda^{n-k} Q (k-1).
      return Decomposition(
          n, IrreducibleBundle(n, column_weight(un, static_cast<std::size_t>(n - k)),
                               k - 1 + k * b.twist()));
    default:
      unsupported("wedge", k, b);
  }
}

Decomposition sym_power(const IrreducibleBundle& b, long k) {
  const int n = b.ambient();
  if (k < 0) throw InputError("symmetric power must be nonnegative");
  if (k == 0) return Decomposition(n, IrreducibleBundle::line(n, 0));
  if (k == 1) return Decomposition(n, b);
  const auto un = static_cast<std::size_t>(n);
  switch (classify(b)) {
    case FundamentalType::Line:
      return Decomposition(n, IrreducibleBundle::line(n, k * b.twist()));
    case FundamentalType::Quotient: {
      std::vector<long> entries(un, 0);
      entries[0] = k;
      return Decomposition(n, IrreducibleBundle(n, Weight(std::move(entries)), k * b.twist()));
    }
    case FundamentalType::CoQuotient:
      // S^k(Q*(1)) = S_{(k,...,k,0)} Q.
      return Decomposition(n, IrreducibleBundle(n, column_weight(un, un - 1, k), k * b.twist()));
    default:
      unsupported("sym", k, b);
  }
}

namespace {

// Powers P_j(V^{+m}) for j = 0..k, built from the powers of V via
// P_j(A + B) = sum_t P_t(A) (x) P_{j-t}(B).
using PowerFn = Decomposition (*)(const IrreducibleBundle&, long);

Decomposition power_of_sum(const Decomposition& d, long k, PowerFn power, bool exterior) {
  const int n = d.ambient();
  std::vector<Decomposition> acc(static_cast<std::size_t>(k + 1), Decomposition(n));
  acc[0] = Decomposition(n, IrreducibleBundle::line(n, 0));
  for (const auto& [b, mult] : d.terms()) {
    const long m = to_long(mult, "multiplicity");
    if (b.is_line()) {
      // Closed form for O(a)^{+m}.
      std::vector<Decomposition> next(acc.size(), Decomposition(n));
      for (long j = 0; j <= k; ++j) {
        for (long t = 0; t <= j; ++t) {
          BigInt c = exterior ? binomial(m, t) : binomial(m + t - 1, t);
          if (c == 0 || acc[static_cast<std::size_t>(j - t)].empty()) continue;
          next[static_cast<std::size_t>(j)] +=
              acc[static_cast<std::size_t>(j - t)].twisted(t * b.twist()).scaled(c);
        }
      }
      acc = std::move(next);
      continue;
    }
    std::vector<Decomposition> powers;
    for (long t = 0; t <= k; ++t) powers.push_back(power(b, t));
    for (long copy = 0; copy < m; ++copy) {
      std::vector<Decomposition> next(acc.size(), Decomposition(n));
      for (long j = 0; j <= k; ++j) {
        for (long t = 0; t <= j; ++t) {
          const auto& left = powers[static_cast<std::size_t>(t)];
          const auto& right = acc[static_cast<std::size_t>(j - t)];
          if (left.empty() || right.empty()) continue;
          next[static_cast<std::size_t>(j)] += tensor(left, right);
        }
      }
      acc = std::move(next);
    }
  }
  return acc[static_cast<std::size_t>(k)];
}

}  // namespace

Decomposition wedge_power(const Decomposition& d, long k) {
  const int n = d.ambient();
  if (k < 0) throw InputError("wedge power must be nonnegative");
  const BigInt r = d.rank();
  if (k == 0) return Decomposition(n, IrreducibleBundle::line(n, 0));
  if (BigInt(k) > r) return Decomposition(n);
  if (k == 1) return d;
  if (BigInt(k) == r) return Decomposition(n, det_bundle(d));
  if (d.terms().size() == 1 && d.terms().begin()->second == 1) {
    return wedge_power(d.terms().begin()->first, k);
  }
  return power_of_sum(d, k, [](const IrreducibleBundle& b, long t) { return wedge_power(b, t); },
                      true);
}

Decomposition sym_power(const Decomposition& d, long k) {
  const int n = d.ambient();
  if (k < 0) throw InputError("symmetric power must be nonnegative");
  if (k == 0) return Decomposition(n, IrreducibleBundle::line(n, 0));
  if (d.empty()) return Decomposition(n);
  if (k == 1) return d;
  if (d.terms().size() == 1 && d.terms().begin()->second == 1) {
    return sym_power(d.terms().begin()->first, k);
  }
  return power_of_sum(d, k, [](const IrreducibleBundle& b, long t) { return sym_power(b, t); },
                      false);
}

IrreducibleBundle det_bundle(const Decomposition& d) {
  long degree = 0;
  for (const auto& [b, m] : d.terms()) degree += to_long(m * det_degree(b), "determinant degree");
  return IrreducibleBundle::line(d.ambient(), degree);
}

Decomposition normalize(const BundleExpr& e) {
  using Kind = BundleExpr::Kind;
  const int n = e.ambient();
  const auto un = static_cast<std::size_t>(n);
  switch (e.kind()) {
    case Kind::Line:
      return Decomposition(n, IrreducibleBundle::line(n, e.parameter()));
    case Kind::Tangent:
      // T = Q(1).
      return Decomposition(n, IrreducibleBundle(n, column_weight(un, 1), 1));
    case Kind::Cotangent: {
      // Omega^p = Lambda^{n-p} Q (-p-1).
      const long p = e.parameter();
      return Decomposition(
          n, IrreducibleBundle(n, column_weight(un, static_cast<std::size_t>(n - p)), -p - 1));
    }
    case Kind::Dual:
      return normalize(e.children()[0]).dual();
    case Kind::Tensor:
      return tensor(normalize(e.children()[0]), normalize(e.children()[1]));
    case Kind::Sum: {
      Decomposition out(n);
      for (const auto& s : e.summands()) out += normalize(s.expr).scaled(s.multiplicity);
      return out;
    }
    case Kind::Wedge:
      return wedge_power(normalize(e.children()[0]), e.parameter());
    case Kind::Sym:
      return sym_power(normalize(e.children()[0]), e.parameter());
  }
  throw InternalError("unknown expression kind");
}

BigInt rank(const BundleExpr& e) { return normalize(e).rank(); }

IrreducibleBundle det_bundle(const BundleExpr& e) { return det_bundle(normalize(e)); }

}  // namespace pncoh
