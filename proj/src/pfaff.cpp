#include "pncoh/pfaff.hpp"

#include <map>
#include <regex>
#include <sstream>

#include "pncoh/linalg.hpp"

namespace pncoh {

namespace {

int nvars_of(int n) { return n + 1; }

Polynomial product_except(const std::vector<Polynomial>& F, std::size_t skip, int nvars) {
  Polynomial p = Polynomial::constant(nvars, 1);
  for (std::size_t k = 0; k < F.size(); ++k) {
    if (k != skip) p *= F[k];
  }
  return p;
}

std::vector<Polynomial> field_from(const std::vector<Rational>& coords, int nvars,
                                   const std::vector<Exponent>& monos, std::size_t components) {
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < components; ++j) {
    Polynomial p(nvars);
    for (std::size_t c = 0; c < monos.size(); ++c) {
      const auto& v = coords[j * monos.size() + c];
      if (v != 0) p += Polynomial::monomial(nvars, monos[c], v);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Polynomial> make_integral(std::vector<Polynomial> v) {
  BigInt den = 1;
  for (const auto& p : v) {
    for (const auto& [e, c] : p.terms()) den = lcm(den, c.get_den());
  }
  for (auto& p : v) p *= Rational(den);
  return v;
}

}  // namespace

Polynomial euler_contraction(const std::vector<Polynomial>& coefficients) {
  if (coefficients.empty()) return Polynomial(0);
  const int nvars = coefficients.front().nvars();
  Polynomial sum(nvars);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    sum += Polynomial::variable(nvars, static_cast<int>(i)) * coefficients[i];
  }
  return sum;
}

TwistedOneForm TwistedOneForm::make(int n, long r, std::vector<Polynomial> coefficients) {
  if (n < 1) throw InputError("ambient dimension must be positive");
  if (r < 1) throw InputError("twist must be at least 1");
  if (coefficients.size() != static_cast<std::size_t>(n + 1)) {
    throw InputError("expected " + std::to_string(n + 1) + " coefficients");
  }
  bool all_zero = true;
  for (const auto& a : coefficients) {
    if (a.nvars() != nvars_of(n)) throw InputError("coefficient ring does not match P^" + std::to_string(n));
    if (a.is_zero()) continue;
    all_zero = false;
    if (!a.is_homogeneous() || a.total_degree() != r - 1) {
      throw InputError("coefficient " + a.to_string() + " is not homogeneous of degree " +
                       std::to_string(r - 1));
    }
  }
  if (all_zero) throw InputError("form is identically zero");
  Polynomial residual = euler_contraction(coefficients);
  if (!residual.is_zero()) throw EulerViolation(std::move(residual));
  return TwistedOneForm(n, r, std::move(coefficients));
}

std::vector<Rational> TwistedOneForm::coordinates() const {
  const auto monos = monomials_of_degree(nvars_of(n_), static_cast<int>(r_ - 1));
  std::vector<Rational> out;
  out.reserve(monos.size() * coefficients_.size());
  for (const auto& a : coefficients_) {
    for (const auto& m : monos) out.push_back(a.coefficient(m));
  }
  return out;
}

std::string TwistedOneForm::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coefficients_[i].to_string() + ") dx" + std::to_string(i);
  }
  return out;
}

TwistedOneForm log_form(int n, const std::vector<Polynomial>& F, const std::vector<Rational>& lambda) {
  if (F.size() < 2) throw InputError("log_form needs at least two polynomials");
  if (F.size() != lambda.size()) throw InputError("log_form: F and lambda differ in length");
  const int nvars = nvars_of(n);
  long r = 0;
  Rational weighted = 0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].nvars() != nvars) throw InputError("log_form: polynomial ring does not match P^" + std::to_string(n));
    if (F[i].is_zero() || !F[i].is_homogeneous() || F[i].total_degree() < 1) {
      throw InputError("log_form: F_" + std::to_string(i) + " must be homogeneous of positive degree");
    }
    if (lambda[i] == 0) throw InputError("log_form: lambda entries must be nonzero");
    r += F[i].total_degree();
    weighted += lambda[i] * F[i].total_degree();
  }
  if (weighted != 0) {
    Polynomial residual = product_except(F, F.size(), nvars);
    residual *= weighted;
    throw EulerViolation(std::move(residual));
  }
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(nvars), Polynomial(nvars));
  for (std::size_t i = 0; i < F.size(); ++i) {
    Polynomial rest = product_except(F, i, nvars);
    rest *= lambda[i];
    for (int j = 0; j < nvars; ++j) coeffs[static_cast<std::size_t>(j)] += rest * F[i].derivative(j);
  }
  return TwistedOneForm::make(n, r, std::move(coeffs));
}

TwistedOneForm pencil_form(const Polynomial& P, const Polynomial& Q) {
  if (P.nvars() != Q.nvars() || P.nvars() < 2) throw InputError("pencil_form: rings differ");
  if (P.is_zero() || Q.is_zero() || !P.is_homogeneous() || !Q.is_homogeneous()) {
    throw InputError("pencil_form: P and Q must be nonzero homogeneous polynomials");
  }
  const int d = P.total_degree();
  if (Q.total_degree() != d) {
    throw InputError("pencil_form: degree mismatch " + std::to_string(d) + " vs " +
                     std::to_string(Q.total_degree()));
  }
  if (d < 1) throw InputError("pencil_form: degree must be at least 1");
  std::vector<Polynomial> coeffs;
  for (int i = 0; i < P.nvars(); ++i) coeffs.push_back(P * Q.derivative(i) - Q * P.derivative(i));
  return TwistedOneForm::make(P.nvars() - 1, 2L * d, std::move(coeffs));
}

SingularScheme singular_scheme(const TwistedOneForm& w) {
  std::vector<Polynomial> gens;
  for (const auto& a : w.coefficients()) {
    if (!a.is_zero()) gens.push_back(a);
  }
  SingularScheme out{IdealPresentation::from_generators(w.n(), std::move(gens)), {}, -1};
  for (int i = 0; i <= w.n(); ++i) out.chart_dimensions.push_back(out.ideal.chart_dimension(i));
  out.dimension = out.ideal.dimension();
  return out;
}

SectionSpace vanishing_section_space(int n, long r, const IdealPresentation& Z) {
  if (r < 1) throw InputError("twist must be at least 1");
  if (Z.n != n) throw InputError("scheme lives on a different P^n");
  if (r - 1 > kMaxGeneratorDegree) {
    throw ScaleExceeded("coefficient degree " + std::to_string(r - 1) + " above " +
                        std::to_string(kMaxGeneratorDegree));
  }
  check_scale(n, {});
  const int nvars = nvars_of(n);
  const auto monos = monomials_of_degree(nvars, static_cast<int>(r - 1));
  const std::size_t per = monos.size();
  const std::size_t unknowns = per * static_cast<std::size_t>(nvars);

  // row key: (kind, chart, coefficient, monomial); kind 0 = Euler relation
  using RowKey = std::tuple<int, int, int, Exponent>;
  std::map<RowKey, std::map<std::size_t, Rational>> rows;

  for (int j = 0; j < nvars; ++j) {
    for (std::size_t c = 0; c < per; ++c) {
      Exponent m = monos[c];
      m[static_cast<std::size_t>(j)] += 1;
      rows[{0, 0, 0, m}][static_cast<std::size_t>(j) * per + c] += 1;
    }
  }
  for (int i = 0; i <= n; ++i) {
    const auto& basis = Z.charts[static_cast<std::size_t>(i)];
    for (std::size_t c = 0; c < per; ++c) {
      const Polynomial nf =
          normal_form(Polynomial::monomial(nvars, monos[c]).dehomogenize(i), basis);
      for (const auto& [m, coef] : nf.terms()) {
        for (int j = 0; j < nvars; ++j) {
          rows[{1, i, j, m}][static_cast<std::size_t>(j) * per + c] += coef;
        }
      }
    }
  }

  RationalMatrix system(rows.size(), unknowns);
  std::size_t r_index = 0;
  for (const auto& [key, entries] : rows) {
    for (const auto& [col, v] : entries) system.at(r_index, col) = v;
    ++r_index;
  }
  SectionSpace out{0, {}};
  for (const auto& v : kernel_basis(std::move(system))) {
    out.basis.push_back(TwistedOneForm::make(
        n, r, make_integral(field_from(v, nvars, monos, static_cast<std::size_t>(nvars)))));
  }
  out.dim = static_cast<long>(out.basis.size());
  return out;
}

std::vector<AnnihilatorDegree> annihilator_distribution(const TwistedOneForm& w, int max_degree) {
  if (max_degree < 0) throw InputError("degree bound must be nonnegative");
  if (max_degree > kMaxGeneratorDegree || w.n() > kMaxChartVariables) {
    throw ScaleExceeded("annihilator bound above desk scale");
  }
  const int nvars = nvars_of(w.n());
  std::vector<AnnihilatorDegree> out;
  for (int t = 0; t <= max_degree; ++t) {
    const auto monos = monomials_of_degree(nvars, t);
    const std::size_t per = monos.size();
    std::map<Exponent, std::map<std::size_t, Rational>, DegRevLexGreater> rows;
    for (int i = 0; i < nvars; ++i) {
      const auto& a = w.coefficients()[static_cast<std::size_t>(i)];
      for (std::size_t c = 0; c < per; ++c) {
        for (const auto& [e, coef] : a.terms()) {
          Exponent m = e;
          for (std::size_t v = 0; v < m.size(); ++v) m[v] += monos[c][v];
          rows[m][static_cast<std::size_t>(i) * per + c] += coef;
        }
      }
    }
    RationalMatrix system(rows.size(), per * static_cast<std::size_t>(nvars));
    std::size_t r_index = 0;
    for (const auto& [key, entries] : rows) {
      for (const auto& [col, v] : entries) system.at(r_index, col) = v;
      ++r_index;
    }
    AnnihilatorDegree deg{t, 0, {}};
    for (const auto& v : kernel_basis(std::move(system))) {
      deg.generators.push_back(make_integral(field_from(v, nvars, monos, static_cast<std::size_t>(nvars))));
    }
    deg.dim = static_cast<long>(deg.generators.size());
    out.push_back(std::move(deg));
  }
  return out;
}

UniquenessReport uniqueness_report(const TwistedOneForm& w) {
  SingularScheme sing = singular_scheme(w);
  SectionSpace space = vanishing_section_space(w.n(), w.r(), sing.ideal);
  if (space.dim < 1) throw InternalError("form does not vanish on its own singular scheme");
  UniquenessReport out{w, std::move(sing), space.dim, std::move(space.basis), std::nullopt, {}};
  out.notes.push_back(
      "vanishing on Sing is tested by membership in the saturated coefficient ideal, chart by chart");
  if (out.sing.dimension > 0) {
    out.notes.push_back("Sing has positive dimension " + std::to_string(out.sing.dimension));
  }
  if (w.n() >= 2) {
    TheoremReport report = check_codim1_generic(w.n(), w.r());
    report.conditions.push_back({"Sing zero-dimensional", out.sing.dimension == 0});
    out.cross_ref = std::move(report);
  }
  return out;
}

bool in_span(const TwistedOneForm& w, const std::vector<TwistedOneForm>& basis) {
  std::vector<RationalVector> rows;
  for (const auto& b : basis) {
    if (b.n() != w.n() || b.r() != w.r()) return false;
    rows.push_back(b.coordinates());
  }
  return in_span(w.coordinates(), rows);
}

TwistedOneForm parse_form(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<int> n;
  long r = 0;
  std::map<int, Polynomial> coeffs;
  const std::regex header(R"(^\s*P\^(\d+)\s+twist\s+(-?\d+)\s*$)");
  const std::regex entry(R"(^\s*A_(\d+)\s*:\s*(.*)$)");
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch m;
    if (!n) {
      if (!std::regex_match(line, m, header)) {
        throw InputError("form file line " + std::to_string(line_no) + ": expected 'P^n twist r'");
      }
      n = std::stoi(m[1]);
      r = std::stol(m[2]);
      continue;
    }
    if (!std::regex_match(line, m, entry)) {
      throw InputError("form file line " + std::to_string(line_no) + ": expected 'A_i: <polynomial>'");
    }
    const int i = std::stoi(m[1]);
    if (i > *n) throw InputError("form file line " + std::to_string(line_no) + ": index out of range");
    if (coeffs.count(i)) throw InputError("form file: A_" + std::to_string(i) + " given twice");
    coeffs.emplace(i, parse_polynomial(m[2].str(), *n + 1));
  }
  if (!n) throw InputError("form file: missing header");
  std::vector<Polynomial> list;
  for (int i = 0; i <= *n; ++i) {
    auto it = coeffs.find(i);
    if (it == coeffs.end()) throw InputError("form file: missing A_" + std::to_string(i));
    list.push_back(it->second);
  }
  return TwistedOneForm::make(*n, r, std::move(list));
}

std::string render_form_file(const TwistedOneForm& w) {
  std::string out = "P^" + std::to_string(w.n()) + " twist " + std::to_string(w.r()) + "\n";
  for (std::size_t i = 0; i < w.coefficients().size(); ++i) {
    out += "A_" + std::to_string(i) + ": " + w.coefficients()[i].to_string() + "\n";
  }
  return out;
}

Polynomial random_homogeneous(int n, int degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5);
  const int nvars = nvars_of(n);
  const auto monos = monomials_of_degree(nvars, degree);
  while (true) {
    Polynomial p(nvars);
    for (const auto& m : monos) p += Polynomial::monomial(nvars, m, coef(rng));
    if (!p.is_zero()) return p;
  }
}

TwistedOneForm random_pencil(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    Polynomial P = random_homogeneous(n, d, rng);
    Polynomial Q = random_homogeneous(n, d, rng);
    try {
      return pencil_form(P, Q);
    } catch (const EulerViolation&) {
      throw;
    } catch (const InputError&) {
      // proportional pair, draw again
    }
  }
}

std::vector<Polynomial> random_linear_forms(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Polynomial> out;
  for (int i = 0; i < count; ++i) out.push_back(random_homogeneous(n, 1, rng));
  return out;
}

TwistedOneForm random_linear_form(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5);
  const int nvars = nvars_of(n);
  while (true) {
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(nvars), Polynomial(nvars));
    bool nonzero = false;
    for (int i = 0; i < nvars; ++i) {
      for (int j = i + 1; j < nvars; ++j) {
        const int b = coef(rng);
        if (b == 0) continue;
        nonzero = true;
        coeffs[static_cast<std::size_t>(i)] += Polynomial::variable(nvars, j) * Rational(b);
        coeffs[static_cast<std::size_t>(j)] -= Polynomial::variable(nvars, i) * Rational(b);
      }
    }
    if (nonzero) return TwistedOneForm::make(n, 2, std::move(coeffs));
  }
}

}  // namespace pncoh
