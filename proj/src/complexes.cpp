#include "pncoh/complexes.hpp"

#include "pncoh/errors.hpp"

namespace pncoh {

BundleExpr omega(int n, int k) {
  if (k == 0) return BundleExpr::line(n, 0);
  return BundleExpr::cotangent(n, k);
}

namespace {

struct Ranks {
  long e;
  long g;
};

Ranks checked_ranks(const BundleExpr& E, const BundleExpr& G) {
  if (E.ambient() != G.ambient()) throw InputError("E and G live on different ambients");
  const long e = to_long(rank(E), "rank(E)");
  const long g = to_long(rank(G), "rank(G)");
  if (g < 1 || e < g) {
    throw InputError("need rank(E) >= rank(G) >= 1, got e = " + std::to_string(e) +
                     ", g = " + std::to_string(g));
  }
  return {e, g};
}

BundleExpr product(std::initializer_list<BundleExpr> factors) {
  auto it = factors.begin();
  BundleExpr out = *it++;
  for (; it != factors.end(); ++it) out = BundleExpr::tensor(out, *it);
  return out;
}

// Lambda^g(E*) (x) Lambda^{g+i} E (x) S_i(G*); the S_0 factor is dropped.
BundleExpr twisted_term(const BundleExpr& E, const BundleExpr& G, long g, long i) {
  const auto wedge_dual_E = BundleExpr::wedge(static_cast<int>(g), BundleExpr::dual(E));
  const auto wedge_E = BundleExpr::wedge(static_cast<int>(g + i), E);
  if (i == 0) return product({wedge_dual_E, wedge_E});
  return product({wedge_dual_E, wedge_E, BundleExpr::sym(static_cast<int>(i), BundleExpr::dual(G))});
}

}  // namespace

ENResolutionReport en_resolution(const BundleExpr& E, const BundleExpr& G, bool twisted) {
  const auto [e, g] = checked_ranks(E, G);
  ENResolutionReport report{E, G, e, g, twisted, {}, {}};
  const auto det_dual_G = BundleExpr::wedge(static_cast<int>(g), BundleExpr::dual(G));
  for (long i = g; i <= e; ++i) {
    BundleExpr term = [&] {
      if (twisted) return twisted_term(E, G, g, i - g);
      const auto wedge_E = BundleExpr::wedge(static_cast<int>(i), E);
      if (i == g) return product({wedge_E, det_dual_G});
      return product(
          {wedge_E, BundleExpr::sym(static_cast<int>(i - g), BundleExpr::dual(G)), det_dual_G});
    }();
    report.ranks.push_back(rank(term));
    report.terms.push_back(std::move(term));
  }
  return report;
}

ENCertificate vanishing_certificate(const BundleExpr& E, const BundleExpr& G) {
  const auto [e, g] = checked_ranks(E, G);
  ENCertificate cert{E, G, e, g, {}, true, {}, {"purity"}, std::nullopt};
  const long span = e - g;

  for (long i = 1; i <= span; ++i) {
    BundleExpr expr = twisted_term(E, G, g, i);
    CohomologyTable table = [&] {
      try {
        return cohomology_table(expr);
      } catch (const UnsupportedPlethysm& err) {
        throw UnsupportedPlethysm("required term i = " + std::to_string(i) + " (" +
                                      expr.render() + "): " + err.what(),
                                  err.summand());
      }
    }();
    const bool ok = i > table.n || table.h(static_cast<std::size_t>(i)) == 0;
    cert.verdict = cert.verdict && ok;
    cert.required.push_back({i, std::move(expr), std::move(table), ok});
  }

  try {
    cert.endomorphism_dim =
        cohomology_table(twisted_term(E, G, g, 0)).h(0);
  } catch (const UnsupportedPlethysm&) {
  }

  auto& trace = cert.chain_trace;
  auto M = [&](long i) { return "M_" + std::to_string(g + i); };
  auto F = [](long j) { return "F_" + std::to_string(j); };
  auto H = [](long p, const std::string& s) { return "H^" + std::to_string(p) + "(" + s + ")"; };

  for (const auto& entry : cert.required) {
    trace.push_back(H(entry.i, M(entry.i)) + " = " + entry.table.h(static_cast<std::size_t>(entry.i)).get_str() +
                    (entry.ok ? "" : "  [hypothesis not satisfied]"));
  }
  if (span == 0) {
    trace.push_back("e = g: the resolution is 0 -> M_" + std::to_string(g) +
                    " -> O -> O_Z -> 0 and F_2 = 0");
    trace.push_back("H^1(F_2) = 0");
    return cert;
  }
  if (!cert.verdict) {
    trace.push_back("chain broken: hypothesis not satisfied, no conclusion drawn");
    return cert;
  }
  if (span == 1) {
    trace.push_back("F_2 = " + M(1) + ", so " + H(1, F(2)) + " = " + H(1, M(1)) + " = 0");
  } else {
    trace.push_back("0 -> " + M(span) + " -> " + M(span - 1) + " -> " + F(span) + " -> 0 gives " +
                    H(span - 1, F(span)) + " = 0");
    for (long j = span - 2; j >= 1; --j) {
      trace.push_back("0 -> " + F(j + 2) + " -> " + M(j) + " -> " + F(j + 1) + " -> 0 gives " +
                      H(j, F(j + 1)) + " subset of " + H(j + 1, F(j + 2)));
    }
    trace.push_back("by descending induction:");
  }
  trace.push_back("H^1(F_2) = 0");
  return cert;
}

bool EulerChase::consistent() const {
  for (bool v : middle_vanishes) {
    if (!v) return false;
  }
  for (const auto& step : chain) {
    if (step.dim != chain.front().dim) return false;
  }
  return true;
}

EulerChase euler_les_chase(int k, int n) {
  if (n < 0 || k < 0 || k > n) throw InputError("euler_les_chase requires 0 <= k <= n");
  EulerChase chase{k, n, {}, {}};
  if (n == 0) {
    chase.chain.push_back({0, 1});  // H^0 of a point
    return chase;
  }
  const BundleExpr omega_k = omega(n, k);
  for (int i = 0; i <= k; ++i) {
    const BundleExpr term =
        BundleExpr::tensor(BundleExpr::wedge(k - i, BundleExpr::tangent(n)), omega_k);
    chase.chain.push_back({static_cast<unsigned>(i),
                           cohomology_table(term).h(static_cast<std::size_t>(i))});
  }
  for (int i = 0; i < k; ++i) {
    chase.middle_vanishes.push_back(
        cohomology_table(BundleExpr::twist(omega_k, k - i)).all_zero());
  }
  return chase;
}

}  // namespace pncoh
