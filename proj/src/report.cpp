#include "pncoh/report.hpp"

#include <sstream>

namespace pncoh {

Json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json rational_to_json(const Rational& v) {
  if (v.get_den() == 1) return big_to_json(v.get_num());
  return Json(v.get_str());
}

namespace {

Json dims_json(const std::vector<BigInt>& dims) {
  Json arr = Json::array();
  for (const auto& d : dims) arr.push_back(big_to_json(d));
  return arr;
}

Json weight_json(const Weight& w) {
  Json arr = Json::array();
  for (long x : w.entries()) arr.push_back(x);
  return arr;
}

Json polys_json(const std::vector<Polynomial>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(p.to_string());
  return arr;
}

std::string dims_text(const std::vector<BigInt>& dims) {
  std::string out = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ",";
    out += dims[i].get_str();
  }
  return out + ")";
}

}  // namespace

Json to_json(const CohomologyTable& t) {
  Json j;
  if (t.expr) j["expr"] = t.expr->render();
  j["n"] = t.n;
  j["h"] = dims_json(t.dims);
  j["chi"] = big_to_json(t.euler_characteristic());
  Json summands = Json::array();
  for (const auto& c : t.contributions) {
    Json s;
    s["summand"] = c.summand.to_string();
    s["multiplicity"] = big_to_json(c.multiplicity);
    if (c.cohomology) {
      s["degree"] = c.cohomology->degree;
      s["weight"] = weight_json(c.cohomology->weight);
      s["dim"] = big_to_json(c.cohomology->dim);
    } else {
      s["degree"] = nullptr;
    }
    summands.push_back(std::move(s));
  }
  j["summands"] = std::move(summands);
  return j;
}

Json to_json(const ChowClass& c) {
  Json arr = Json::array();
  for (const auto& x : c.coefficients()) arr.push_back(rational_to_json(x));
  return arr;
}

Json to_json(const PorteousResult& p) {
  Json j;
  j["codim"] = p.codim;
  j["class"] = to_json(p.cls);
  j["degree"] = big_to_json(p.degree);
  j["exceeds_ambient"] = p.exceeds_ambient;
  return j;
}

Json to_json(const ENResolutionReport& r) {
  Json j;
  j["E"] = r.E.render();
  j["G"] = r.G.render();
  j["n"] = r.E.ambient();
  j["e"] = r.e;
  j["g"] = r.g;
  j["twisted"] = r.twisted;
  Json terms = Json::array();
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    terms.push_back({{"expr", r.terms[i].render()}, {"rank", big_to_json(r.ranks[i])}});
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const ENCertificate& c) {
  Json j;
  j["e"] = c.e;
  j["g"] = c.g;
  j["n"] = c.ambient();
  Json req = Json::array();
  for (const auto& r : c.required) {
    req.push_back({{"i", r.i}, {"expr", r.expr.render()}, {"h", dims_json(r.table.dims)}, {"ok", r.ok}});
  }
  j["required"] = std::move(req);
  j["assumptions"] = c.assumptions;
  j["verdict"] = c.verdict;
  j["chain_trace"] = c.chain_trace;
  if (c.endomorphism_dim) j["endomorphism_dim"] = big_to_json(*c.endomorphism_dim);
  return j;
}

Json to_json(const EulerChase& c) {
  Json j;
  j["k"] = c.k;
  j["n"] = c.n;
  Json chain = Json::array();
  for (const auto& s : c.chain) chain.push_back({{"i", s.degree}, {"dim", big_to_json(s.dim)}});
  j["chain"] = std::move(chain);
  j["middle_vanishes"] = c.middle_vanishes;
  j["consistent"] = c.consistent();
  return j;
}

Json to_json(const TheoremReport& r) {
  Json j;
  j["theorem"] = std::string(theorem_key(r.theorem));
  Json in;
  in["n"] = r.inputs.n;
  if (r.inputs.k) in["k"] = *r.inputs.k;
  if (r.inputs.r) in["r"] = *r.inputs.r;
  if (r.inputs.degrees) in["degrees"] = *r.inputs.degrees;
  if (r.inputs.E) in["E"] = *r.inputs.E;
  if (r.inputs.G) in["G"] = *r.inputs.G;
  if (r.inputs.F) in["F"] = *r.inputs.F;
  j["inputs"] = std::move(in);
  Json conds = Json::array();
  for (const auto& c : r.conditions) conds.push_back({{"name", c.name}, {"ok", c.ok}});
  j["conditions"] = std::move(conds);
  Json groups = Json::array();
  for (const auto& g : r.groups) groups.push_back({{"i", g.i}, {"p", g.p}, {"dim", big_to_json(g.dim)}});
  j["groups"] = std::move(groups);
  j["verdict"] = r.hypotheses_hold() ? "hypotheses-hold" : "hypotheses-fail";
  j["notes"] = r.notes;
  if (r.certificate) j["certificate"] = to_json(*r.certificate);
  return j;
}

Json to_json(const TwistedOneForm& w) {
  Json j;
  j["n"] = w.n();
  j["r"] = w.r();
  j["coefficients"] = polys_json(w.coefficients());
  return j;
}

Json to_json(const SingularScheme& s) {
  Json j;
  j["generators"] = polys_json(s.ideal.generators);
  Json charts = Json::array();
  for (std::size_t i = 0; i < s.ideal.charts.size(); ++i) {
    charts.push_back({{"chart", i}, {"basis", polys_json(s.ideal.charts[i])},
                      {"dimension", s.chart_dimensions[i]}});
  }
  j["charts"] = std::move(charts);
  j["dimension"] = s.dimension;
  return j;
}

Json to_json(const SectionSpace& s) {
  Json j;
  j["dim"] = s.dim;
  Json basis = Json::array();
  for (const auto& w : s.basis) basis.push_back(polys_json(w.coefficients()));
  j["basis"] = std::move(basis);
  return j;
}

Json to_json(const std::vector<AnnihilatorDegree>& a) {
  Json arr = Json::array();
  for (const auto& d : a) {
    Json gens = Json::array();
    for (const auto& g : d.generators) gens.push_back(polys_json(g));
    arr.push_back({{"degree", d.degree}, {"dim", d.dim}, {"generators", std::move(gens)}});
  }
  return arr;
}

Json to_json(const UniquenessReport& u) {
  Json j;
  j["form"] = to_json(u.form);
  j["sing_dimension"] = u.sing.dimension;
  j["section_space_dim"] = u.section_space_dim;
  Json basis = Json::array();
  for (const auto& w : u.basis) basis.push_back(polys_json(w.coefficients()));
  j["basis"] = std::move(basis);
  j["verdict"] = u.verdict();
  if (u.cross_ref) j["cross_ref"] = to_json(*u.cross_ref);
  j["notes"] = u.notes;
  return j;
}

std::string render_text(const CohomologyTable& t) {
  std::ostringstream out;
  if (t.expr) out << t.expr->render() << " on P^" << t.n << "\n";
  for (int p = 0; p <= t.n; ++p) {
    out << "h^" << p << " = " << t.dims[static_cast<std::size_t>(p)].get_str();
    bool first = true;
    for (const auto& c : t.contributions) {
      if (!c.cohomology || c.cohomology->degree != static_cast<unsigned>(p)) continue;
      out << (first ? "   from " : ", ");
      first = false;
      if (c.multiplicity != 1) out << c.multiplicity.get_str() << "*";
      out << c.summand.to_string() << " [" << c.cohomology->dim.get_str() << "]";
    }
    out << "\n";
  }
  std::vector<std::string> silent;
  for (const auto& c : t.contributions) {
    if (!c.cohomology) silent.push_back(c.summand.to_string());
  }
  if (!silent.empty()) {
    out << "acyclic:";
    for (const auto& s : silent) out << " " << s;
    out << "\n";
  }
  out << "chi = " << t.euler_characteristic().get_str() << "\n";
  return out.str();
}

std::string render_text(const PorteousResult& p) {
  std::ostringstream out;
  out << "expected codimension " << p.codim << "\n";
  out << "class " << p.cls.to_string() << "\n";
  out << "degree " << p.degree.get_str();
  if (p.exceeds_ambient) out << " (codimension exceeds ambient, locus empty)";
  out << "\n";
  return out.str();
}

std::string render_text(const ENResolutionReport& r) {
  std::ostringstream out;
  out << "e = " << r.e << ", g = " << r.g << (r.twisted ? ", twisted" : "") << "\n";
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    out << "term " << i << ": " << r.terms[i].render() << "  rank " << r.ranks[i].get_str() << "\n";
  }
  return out.str();
}

std::string render_text(const ENCertificate& c) {
  std::ostringstream out;
  out << "e = " << c.e << ", g = " << c.g << ", n = " << c.ambient() << "\n";
  for (const auto& r : c.required) {
    out << "i = " << r.i << ": " << r.expr.render() << "  h = " << dims_text(r.table.dims)
        << (r.ok ? "  ok" : "  FAIL") << "\n";
  }
  for (const auto& line : c.chain_trace) out << "  " << line << "\n";
  if (c.endomorphism_dim) out << "endomorphism dim " << c.endomorphism_dim->get_str() << "\n";
  out << "assumptions:";
  for (const auto& a : c.assumptions) out << " " << a;
  out << "\nverdict " << (c.verdict ? "true" : "false") << "\n";
  return out.str();
}

std::string render_text(const TheoremReport& r) {
  std::ostringstream out;
  out << theorem_key(r.theorem) << " on P^" << r.inputs.n << "\n";
  for (const auto& c : r.conditions) out << (c.ok ? "  [ok]   " : "  [fail] ") << c.name << "\n";
  for (const auto& g : r.groups) {
    out << "  i=" << g.i << " p=" << g.p << " dim " << g.dim.get_str() << "\n";
  }
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  out << (r.hypotheses_hold() ? "hypotheses-hold" : "hypotheses-fail") << "\n";
  return out.str();
}

std::string render_text(const SingularScheme& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.ideal.charts.size(); ++i) {
    out << "chart x" << i << " = 1: dim " << s.chart_dimensions[i] << ", basis {";
    for (std::size_t k = 0; k < s.ideal.charts[i].size(); ++k) {
      out << (k ? ", " : "") << s.ideal.charts[i][k].to_string();
    }
    out << "}\n";
  }
  out << "dimension " << s.dimension << "\n";
  return out.str();
}

std::string render_text(const SectionSpace& s) {
  std::ostringstream out;
  out << "dimension " << s.dim << "\n";
  for (const auto& w : s.basis) out << "  " << w.to_string() << "\n";
  return out.str();
}

std::string render_text(const std::vector<AnnihilatorDegree>& a) {
  std::ostringstream out;
  for (const auto& d : a) {
    out << "degree " << d.degree << ": dim " << d.dim << "\n";
    for (const auto& g : d.generators) {
      out << "  (";
      for (std::size_t i = 0; i < g.size(); ++i) out << (i ? ", " : "") << g[i].to_string();
      out << ")\n";
    }
  }
  return out.str();
}

std::string render_text(const UniquenessReport& u) {
  std::ostringstream out;
  out << "form on P^" << u.form.n() << ", twist " << u.form.r() << ": " << u.form.to_string() << "\n";
  out << "Sing dimension " << u.sing.dimension << "\n";
  out << "section space dimension " << u.section_space_dim << "\n";
  for (const auto& n : u.notes) out << "note: " << n << "\n";
  if (u.cross_ref) out << render_text(*u.cross_ref);
  out << u.verdict() << "\n";
  return out.str();
}

}  // namespace pncoh
