#include "pncoh/groebner.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

#include "pncoh/errors.hpp"

namespace pncoh {

void check_scale(int nvars, std::span<const Polynomial> gens) {
  if (nvars > kMaxChartVariables) {
    throw ScaleExceeded("ring has " + std::to_string(nvars) + " variables per chart, limit " +
                        std::to_string(kMaxChartVariables));
  }
  for (const auto& g : gens) {
    if (g.total_degree() > kMaxGeneratorDegree) {
      throw ScaleExceeded("generator of degree " + std::to_string(g.total_degree()) +
                          ", limit " + std::to_string(kMaxGeneratorDegree));
    }
  }
}

namespace {

Exponent quotient(const Exponent& num, const Exponent& den) {
  Exponent q(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) q[i] = num[i] - den[i];
  return q;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  Polynomial p = f;
  Polynomial rem(f.nvars());
  while (!p.is_zero()) {
    const Exponent lm = p.leading_monomial();
    const Rational lc = p.leading_coefficient();
    bool reduced = false;
    for (const auto& g : basis) {
      if (g.is_zero() || !divides(g.leading_monomial(), lm)) continue;
      p.add_scaled_shifted(g, quotient(lm, g.leading_monomial()), -lc / g.leading_coefficient());
      reduced = true;
      break;
    }
    if (!reduced) {
      rem += Polynomial::monomial(f.nvars(), lm, lc);
      p -= Polynomial::monomial(f.nvars(), lm, lc);
    }
  }
  return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Exponent l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial out(f.nvars());
  out.add_scaled_shifted(f, quotient(l, f.leading_monomial()), 1 / f.leading_coefficient());
  out.add_scaled_shifted(g, quotient(l, g.leading_monomial()), -1 / g.leading_coefficient());
  return out;
}

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens) {
  std::vector<Polynomial> basis;
  for (auto& g : gens) {
    if (!g.is_zero()) basis.push_back(g.primitive());
  }
  if (basis.empty()) return basis;
  const int nvars = basis.front().nvars();
  for (const auto& g : basis) {
    if (g.nvars() != nvars) throw InputError("generators in different rings");
  }

  using Pair = std::pair<std::size_t, std::size_t>;
  std::set<Pair> pending;
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
  }
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  const DegRevLexGreater greater;
  while (!pending.empty()) {
    // normal strategy: smallest lcm first
    auto best = pending.begin();
    Exponent best_lcm = lcm(basis[best->first].leading_monomial(),
                            basis[best->second].leading_monomial());
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponent l = lcm(basis[it->first].leading_monomial(), basis[it->second].leading_monomial());
      if (greater(best_lcm, l)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);

    const Exponent& li = basis[i].leading_monomial();
    const Exponent& lj = basis[j].leading_monomial();
    if (coprime(li, lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (divides(basis[k].leading_monomial(), best_lcm) && !is_pending(i, k) &&
          !is_pending(j, k)) {
        chain = true;
      }
    }
    if (chain) continue;

    Polynomial r = normal_form(s_polynomial(basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    r = r.primitive();
    if (r.is_constant()) return {Polynomial::constant(nvars, 1)};
    const std::size_t idx = basis.size();
    basis.push_back(std::move(r));
    for (std::size_t k = 0; k < idx; ++k) pending.insert({k, idx});
  }

  // minimize, then interreduce
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& lj = basis[j].leading_monomial();
      const auto& li = basis[i].leading_monomial();
      if (divides(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial head = Polynomial::monomial(nvars, minimal[i].leading_monomial(),
                                           minimal[i].leading_coefficient());
    Polynomial tail = minimal[i] - head;
    reduced.push_back((head + normal_form(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return greater(b.leading_monomial(), a.leading_monomial());
  });
  return reduced;
}

bool satisfies_s_pair_criterion(std::span<const Polynomial> basis) {
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  }
  return true;
}

int staircase_dimension(std::span<const Polynomial> basis, int nvars) {
  for (const auto& g : basis) {
    if (!g.is_zero() && g.is_constant()) return -1;
  }
  int best = 0;
  const unsigned limit = 1u << nvars;
  for (unsigned mask = 0; mask < limit; ++mask) {
    const int size = std::popcount(mask);
    if (size <= best) continue;
    bool free = true;
    for (const auto& g : basis) {
      const auto& lm = g.leading_monomial();
      bool inside = true;
      for (int v = 0; v < nvars; ++v) {
        if (lm[static_cast<std::size_t>(v)] > 0 && !(mask & (1u << v))) inside = false;
      }
      if (inside) {
        free = false;
        break;
      }
    }
    if (free) best = size;
  }
  return best;
}

IdealPresentation IdealPresentation::from_generators(int n, std::vector<Polynomial> gens) {
  IdealPresentation out;
  out.n = n;
  for (const auto& g : gens) {
    if (g.nvars() != n + 1) throw InputError("generator ring does not match P^" + std::to_string(n));
    if (!g.is_homogeneous()) throw InputError("generator is not homogeneous: " + g.to_string());
  }
  check_scale(n, gens);
  out.generators = std::move(gens);
  for (int i = 0; i <= n; ++i) {
    std::vector<Polynomial> local;
    for (const auto& g : out.generators) local.push_back(g.dehomogenize(i));
    out.charts.push_back(buchberger(std::move(local)));
  }
  return out;
}

int IdealPresentation::chart_dimension(int i) const {
  return staircase_dimension(charts.at(static_cast<std::size_t>(i)), n);
}

int IdealPresentation::dimension() const {
  int d = -1;
  for (int i = 0; i <= n; ++i) d = std::max(d, chart_dimension(i));
  return d;
}

bool membership_on_charts(const Polynomial& f, const IdealPresentation& ideal) {
  for (int i = 0; i <= ideal.n; ++i) {
    if (!normal_form(f.dehomogenize(i), ideal.charts[static_cast<std::size_t>(i)]).is_zero()) {
      return false;
    }
  }
  return true;
}

}  // namespace pncoh
