// pncoh: cohomology of homogeneous bundles on P^n, degeneracy certificates,
// hypothesis checks and polynomial 1-form experiments.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "pncoh/expression_parser.hpp"
#include "pncoh/report.hpp"
#include "sweep.hpp"

using namespace pncoh;

namespace {

enum Exit { kOk = 0, kVerdictFalse = 1, kInputError = 2, kScale = 3, kInternal = 4 };

struct Outcome {
  Json json;
  std::string text;
  int exit_code = kOk;
};

struct Options {
  std::string format = "text";
  std::optional<std::int64_t> seed;
  std::vector<std::string> words;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<long> r;
  std::string degrees;
  std::string E;
  std::string G;
  std::string F;
  bool assume_ample = false;
  bool twisted = false;
  std::string id;
  std::string action;
  std::string file;
  std::string build;
  std::string polys;
  std::string lambda;
  int degree = 2;
  int bound = 1;
  cli::SweepParams sweep;
};

std::string joined(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += " ";
    out += w;
  }
  return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw InputError(std::string("empty entry in ") + what);
    try {
      if constexpr (std::is_same_v<T, Rational>) {
        Rational v(item);
        v.canonicalize();
        out.push_back(v);
      } else {
        std::size_t used = 0;
        const long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        out.push_back(v);
      }
    } catch (const std::exception&) {
      throw InputError(std::string("bad number '") + item + "' in " + what);
    }
  }
  return out;
}

std::vector<std::string> split_polys(const std::string& text) {
  std::vector<std::string> out;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ';');
  std::stringstream in(normalized);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  }
  return out;
}

BundleExpr expr_arg(const std::string& text, const Options& o, const char* what) {
  if (text.empty()) throw InputError(std::string("missing ") + what);
  return parse_expression(text, o.n);
}

BundleExpr words_expr(const Options& o) {
  const std::string text = joined(o.words);
  if (text.empty()) throw InputError("missing bundle expression");
  return parse_expression(text, o.n);
}

Json warnings_json(const BundleExpr& e) { return Json(expression_warnings(e)); }

std::string warnings_text(const BundleExpr& e) {
  std::string out;
  for (const auto& w : expression_warnings(e)) out += "warning: " + w + "\n";
  return out;
}

Outcome run_cohomology(const Options& o) {
  const BundleExpr e = words_expr(o);
  const CohomologyTable t = cohomology_table(e);
  Outcome out;
  out.json = to_json(t);
  out.json["warnings"] = warnings_json(e);
  out.text = warnings_text(e) + render_text(t);
  return out;
}

Outcome run_chern(const Options& o) {
  const BundleExpr e = words_expr(o);
  const ChowClass c = total_chern_class(e);
  const ChowClass ch = chern_character(e);
  Outcome out;
  out.json = {{"expr", e.render()}, {"n", e.ambient()}, {"rank", big_to_json(rank(e))},
              {"chern", to_json(c)}, {"ch", to_json(ch)}};
  out.text = warnings_text(e) + "c  = " + c.to_string() + "\nch = " + ch.to_string() + "\n";
  return out;
}

Outcome run_chi(const Options& o) {
  const BundleExpr e = words_expr(o);
  const BigInt hrr = hrr_chi(e);
  const BigInt bwb = cohomology_table(e).euler_characteristic();
  Outcome out;
  out.json = {{"expr", e.render()}, {"n", e.ambient()}, {"hrr", big_to_json(hrr)},
              {"bwb", big_to_json(bwb)}, {"agree", hrr == bwb}};
  out.text = "chi (Riemann-Roch) = " + hrr.get_str() + "\nchi (cohomology)   = " + bwb.get_str() + "\n";
  if (hrr != bwb) throw InternalError("Riemann-Roch and cohomology disagree for " + e.render());
  return out;
}

Outcome run_en_resolution(const Options& o) {
  const auto r = en_resolution(expr_arg(o.E, o, "--E"), expr_arg(o.G, o, "--G"), o.twisted);
  return {to_json(r), render_text(r), kOk};
}

Outcome run_certificate(const Options& o) {
  const auto c = vanishing_certificate(expr_arg(o.E, o, "--E"), expr_arg(o.G, o, "--G"));
  return {to_json(c), render_text(c), c.verdict ? kOk : kVerdictFalse};
}

Outcome run_porteous(const Options& o) {
  const auto p = porteous_class(expr_arg(o.E, o, "--E"), expr_arg(o.G, o, "--G"));
  return {to_json(p), render_text(p), kOk};
}

int need(const std::optional<int>& v, const char* what) {
  if (!v) throw InputError(std::string("missing ") + what);
  return *v;
}

Outcome report_outcome(const TheoremReport& r) {
  return {to_json(r), render_text(r), r.hypotheses_hold() ? kOk : kVerdictFalse};
}

Outcome run_check(const Options& o) {
  const auto id = parse_theorem_key(o.id);
  if (!id) throw InputError("unknown theorem id '" + o.id + "'");
  switch (*id) {
    case TheoremId::DegeneracyMap:
      return report_outcome(check_degeneracy_map(expr_arg(o.E, o, "--E"), expr_arg(o.G, o, "--G")));
    case TheoremId::SplitDistribution:
      if (!o.F.empty()) return report_outcome(check_locally_free_distribution(expr_arg(o.F, o, "--F"), o.assume_ample));
      return report_outcome(check_split_distribution(need(o.n, "--n"), need(o.k, "--k"),
                                                     parse_list<long>(o.degrees, "--degrees")));
    case TheoremId::SplitVanishing:
      return report_outcome(check_split_vanishing(need(o.n, "--n"), need(o.k, "--k"),
                                                  parse_list<long>(o.degrees, "--degrees")));
    case TheoremId::Codim1Generic:
      if (!o.r) throw InputError("missing --r");
      return report_outcome(check_codim1_generic(need(o.n, "--n"), *o.r));
    case TheoremId::Endomorphism:
      return report_outcome(check_endomorphism(need(o.k, "--k"), need(o.n, "--n")));
  }
  throw InternalError("unhandled theorem id");
}

std::vector<Polynomial> parse_polys(const std::string& text, int n) {
  std::vector<Polynomial> out;
  for (const auto& item : split_polys(text)) out.push_back(parse_polynomial(item, n + 1));
  return out;
}

TwistedOneForm load_form(const Options& o) {
  if (!o.file.empty()) {
    std::ifstream in(o.file);
    if (!in) throw InputError("cannot open form file '" + o.file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_form(buf.str());
  }
  const std::uint64_t seed = static_cast<std::uint64_t>(o.seed.value_or(0));
  if (o.build == "log") {
    const int n = need(o.n, "--n");
    return log_form(n, parse_polys(o.polys, n), parse_list<Rational>(o.lambda, "--lambda"));
  }
  if (o.build == "pencil") {
    const int n = need(o.n, "--n");
    auto pq = parse_polys(o.polys, n);
    if (pq.size() != 2) throw InputError("--build pencil needs --polys \"P;Q\"");
    return pencil_form(pq[0], pq[1]);
  }
  if (o.build == "random-pencil") return random_pencil(need(o.n, "--n"), o.degree, seed);
  if (o.build == "random") return random_linear_form(need(o.n, "--n"), seed);
  if (o.build == "random-log") {
    const int n = need(o.n, "--n");
    const auto lambda = parse_list<Rational>(o.lambda.empty() ? "1,1,-2" : o.lambda, "--lambda");
    return log_form(n, random_linear_forms(n, static_cast<int>(lambda.size()), seed), lambda);
  }
  throw InputError("pfaff needs --file or --build log|pencil|random|random-pencil|random-log");
}

Outcome run_pfaff(const Options& o) {
  const TwistedOneForm w = load_form(o);
  Outcome out;
  if (o.action == "load") {
    out.json = to_json(w);
    out.json["euler_relation"] = true;
    out.text = render_form_file(w);
  } else if (o.action == "sing") {
    const auto s = singular_scheme(w);
    out.json = to_json(s);
    out.text = render_text(s);
  } else if (o.action == "section-space") {
    const auto s = singular_scheme(w);
    const auto space = vanishing_section_space(w.n(), w.r(), s.ideal);
    out.json = to_json(space);
    out.json["contains_form"] = in_span(w, space.basis);
    out.text = render_text(space);
  } else if (o.action == "annihilator") {
    const auto a = annihilator_distribution(w, o.bound);
    out.json = to_json(a);
    out.text = render_text(a);
  } else if (o.action == "uniqueness") {
    const auto u = uniqueness_report(w);
    out.json = to_json(u);
    out.text = render_text(u);
    if (u.cross_ref && !u.cross_ref->hypotheses_hold()) out.exit_code = kVerdictFalse;
  } else {
    throw InputError("unknown pfaff action '" + o.action + "'");
  }
  return out;
}

Outcome run_sweep(const Options& o) {
  cli::SweepParams p = o.sweep;
  p.seed = static_cast<std::uint64_t>(o.seed.value_or(0));
  p.expr = o.E;
  const auto result = cli::run_sweep(p);
  Outcome out;
  out.json = {{"kind", p.kind}, {"rows", result.rows}, {"all_ok", result.all_ok}};
  std::ostringstream text;
  for (const auto& row : result.rows) {
    Json brief = row;
    brief.erase("chase");
    text << brief.dump() << "\n";
  }
  text << (result.all_ok ? "all ok" : "FAILURES") << "\n";
  out.text = text.str();
  out.exit_code = result.all_ok ? kOk : kVerdictFalse;
  return out;
}

Json command_echo(const std::string& sub, const Options& o, const std::vector<std::string>& args) {
  Json j;
  j["subcommand"] = sub;
  j["args"] = args;
  if (o.seed) {
    j["seed"] = *o.seed;
  } else {
    j["seed"] = nullptr;
  }
  return j;
}

/// "--degrees -1,-1" would read the list as a short flag; glue it to its option.
std::vector<std::string> glue_negative_values(int argc, char** argv) {
  static const std::regex numeric(R"(^-\d[\d,/\s-]*$)");
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    const bool is_long_option = arg.rfind("--", 0) == 0 && arg.find('=') == std::string::npos;
    if (is_long_option && i + 1 < argc && std::regex_match(argv[i + 1], numeric)) {
      out.push_back(arg + "=" + argv[i + 1]);
      ++i;
    } else {
      out.push_back(std::move(arg));
    }
  }
  return out;
}

void emit_error(const Options& o, const std::string& kind, const std::string& message, Json extra,
                const Json& echo) {
  if (o.format == "json") {
    Json j;
    j["command"] = echo;
    j["error"] = {{"kind", kind}, {"message", message}};
    for (auto& [k, v] : extra.items()) j["error"][k] = v;
    std::cout << j.dump(2) << "\n";
  }
  std::cerr << "error: " << message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology and uniqueness computations on projective space", "pncoh"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for randomized builders and sweeps");

  auto add_ambient = [&](CLI::App* sub) { sub->add_option("--n", o.n, "Ambient P^n"); };
  auto add_expr_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("expr", o.words, "Bundle expression, optionally ending in 'on P^n'")->required();
    add_ambient(sub);
    return sub;
  };
  add_expr_cmd("cohomology", "Cohomology table h^0..h^n");
  add_expr_cmd("chern", "Total Chern class and Chern character");
  add_expr_cmd("chi", "Euler characteristic by Riemann-Roch and by cohomology");

  auto add_pair_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--E", o.E, "Source bundle")->required();
    sub->add_option("--G", o.G, "Target bundle")->required();
    add_ambient(sub);
    return sub;
  };
  add_pair_cmd("en-resolution", "Terms of the Eagon-Northcott complex")
      ->add_flag("--twisted", o.twisted, "Twisted variant");
  add_pair_cmd("certificate", "Vanishing certificate for a map E -> G");
  add_pair_cmd("porteous", "Degeneracy class of a map E -> G");

  auto* check = app.add_subcommand("check", "Check theorem hypotheses");
  check->add_option("id", o.id, "thm-1-1 | thm-1-2 | thm-1-4 | prop-4-5 | lemma-4-4")->required();
  add_ambient(check);
  check->add_option("--k", o.k, "Rank of the distribution / form degree");
  check->add_option("--r", o.r, "Twist of the 1-form");
  check->add_option("--degrees", o.degrees, "Split type of F, comma separated");
  check->add_option("--E", o.E, "Source bundle");
  check->add_option("--G", o.G, "Target bundle");
  check->add_option("--F", o.F, "Locally free distribution F");
  check->add_flag("--assume-ample", o.assume_ample, "Assert the ampleness condition for non-split F");

  auto* pfaff = app.add_subcommand("pfaff", "Polynomial 1-form experiments");
  pfaff->add_option("action", o.action, "load | sing | section-space | annihilator | uniqueness")
      ->required()
      ->check(CLI::IsMember({"load", "sing", "section-space", "annihilator", "uniqueness"}));
  pfaff->add_option("--file", o.file, "Form file");
  pfaff->add_option("--build", o.build, "log | pencil | random | random-pencil | random-log");
  add_ambient(pfaff);
  pfaff->add_option("--polys", o.polys, "Polynomials separated by ';' or ','");
  pfaff->add_option("--lambda", o.lambda, "Residues for --build log, comma separated");
  pfaff->add_option("--degree", o.degree, "Degree for random-pencil");
  pfaff->add_option("--bound", o.bound, "Degree bound for annihilator");

  auto* sweep = app.add_subcommand("sweep", "Parameter sweeps on a worker pool");
  sweep->add_option("kind", o.sweep.kind, "bott | lemma | codim1 | split | twist")
      ->required()
      ->check(CLI::IsMember({"bott", "lemma", "codim1", "split", "twist"}));
  sweep->add_option("--n-min", o.sweep.n_min);
  sweep->add_option("--n-max", o.sweep.n_max);
  sweep->add_option("--n-limit", o.sweep.n_limit, "Largest n a sweep may reach");
  sweep->add_option("--s-min", o.sweep.s_min);
  sweep->add_option("--s-max", o.sweep.s_max);
  sweep->add_option("--r-min", o.sweep.r_min);
  sweep->add_option("--r-max", o.sweep.r_max);
  sweep->add_option("--count", o.sweep.count, "Fixture count for split");
  sweep->add_option("--E", o.E, "Base bundle for twist");
  sweep->add_option("--threads", o.sweep.threads, "Worker threads, 0 = all cores");

  std::vector<std::string> args = glue_negative_values(argc, argv);
  std::string sub_name;
  Json echo;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    sub_name = app.get_subcommands().front()->get_name();
    echo = command_echo(sub_name, o, args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    Outcome out;
    if (sub_name == "cohomology") out = run_cohomology(o);
    else if (sub_name == "chern") out = run_chern(o);
    else if (sub_name == "chi") out = run_chi(o);
    else if (sub_name == "en-resolution") out = run_en_resolution(o);
    else if (sub_name == "certificate") out = run_certificate(o);
    else if (sub_name == "porteous") out = run_porteous(o);
    else if (sub_name == "check") out = run_check(o);
    else if (sub_name == "pfaff") out = run_pfaff(o);
    else out = run_sweep(o);

    if (o.format == "json") {
      Json doc;
      doc["command"] = echo;
      doc["result"] = std::move(out.json);
      doc["exit_code"] = out.exit_code;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << out.text;
    }
    return out.exit_code;
  } catch (const ParseError& e) {
    Json expected = Json::array();
    for (const auto& t : e.expected()) expected.push_back(t);
    emit_error(o, "parse", e.what(), {{"position", e.position()}, {"expected", expected}}, echo);
    return kInputError;
  } catch (const EulerViolation& e) {
    emit_error(o, "euler", e.what(), {{"residual", e.residual().to_string()}}, echo);
    return kInputError;
  } catch (const InputError& e) {
    emit_error(o, "input", e.what(), Json::object(), echo);
    return kInputError;
  } catch (const UnsupportedPlethysm& e) {
    emit_error(o, "unsupported-plethysm", e.what(), {{"summand", e.summand()}}, echo);
    return kScale;
  } catch (const ScaleExceeded& e) {
    emit_error(o, "scale", e.what(), Json::object(), echo);
    return kScale;
  } catch (const std::exception& e) {
    emit_error(o, "internal", e.what(), Json::object(), echo);
    return kInternal;
  }
}
