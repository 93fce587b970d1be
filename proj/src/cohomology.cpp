#include "pncoh/cohomology.hpp"

#include <algorithm>

#include "pncoh/errors.hpp"

namespace pncoh {

std::optional<SummandCohomology> bwb_cohomology(const IrreducibleBundle& b) {
  const auto n = static_cast<std::size_t>(b.ambient());
  // GL(n+1) weight (lambda_1, ..., lambda_n, -d).
  std::vector<long> w(b.lambda().entries().begin(), b.lambda().entries().end());
  w.push_back(-b.twist());
  const auto rho = standard_rho(n + 1);
  auto reduced = dotted_weyl_reduce(w, rho);
  if (!reduced) return std::nullopt;
  BigInt dim = weyl_dim(reduced->sorted, n + 1);
  return SummandCohomology{reduced->inversions, std::move(reduced->sorted), std::move(dim)};
}

BigInt CohomologyTable::euler_characteristic() const {
  BigInt chi = 0;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    if (p % 2 == 0) {
      chi += dims[p];
    } else {
      chi -= dims[p];
    }
  }
  return chi;
}

bool CohomologyTable::all_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](const BigInt& v) { return v == 0; });
}

std::vector<BigInt> bott_closed_form(int k, long s, int n) {
  if (n < 1 || k < 0 || k > n) throw InputError("bott_closed_form requires 0 <= k <= n");
  std::vector<BigInt> h(static_cast<std::size_t>(n + 1), 0);
  if (s > k) h[0] = binomial(s + n - k, s) * binomial(s - 1, k);
  if (s == 0) h[static_cast<std::size_t>(k)] = 1;
  if (s < k - n) h[static_cast<std::size_t>(n)] = binomial(-s + k, -s) * binomial(-s - 1, n - k);
  return h;
}

CohomologyTable cohomology_table(const Decomposition& d) {
  CohomologyTable table;
  table.n = d.ambient();
  table.dims.assign(static_cast<std::size_t>(d.ambient() + 1), 0);
  for (const auto& [b, m] : d.terms()) {
    auto coh = bwb_cohomology(b);
    if (coh) table.dims[coh->degree] += m * coh->dim;
    table.contributions.push_back({b, m, std::move(coh)});
  }
  return table;
}

CohomologyTable cohomology_table(const BundleExpr& e) {
  CohomologyTable table = cohomology_table(normalize(e));
  table.expr = e;
  return table;
}

bool serre_dual_check(const BundleExpr& e) {
  const int n = e.ambient();
  const Decomposition d = normalize(e);
  const CohomologyTable direct = cohomology_table(d);
  const CohomologyTable dual = cohomology_table(d.dual().twisted(-n - 1));
  for (int i = 0; i <= n; ++i) {
    if (direct.dims[static_cast<std::size_t>(i)] != dual.dims[static_cast<std::size_t>(n - i)]) {
      return false;
    }
  }
  return true;
}

}  // namespace pncoh
