#include "akit/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "akit/catalog.hpp"
#include "akit/grading.hpp"
#include "akit/session.hpp"

namespace akit::cli {

namespace {

struct Options {
  std::string input;
  std::string format = "text";
  std::uint64_t seed = 0;
  int max_degree = 8;
  std::optional<std::uint64_t> characteristic;
  std::string map;
  std::string expr;
  std::string xmin;
  std::string weights;
  std::string gens1;
  std::string gens2;
  std::string entry;
};

ReportEntry info(std::string check, std::string value) {
  return ReportEntry{std::move(check), "INFO", std::nullopt, std::move(value)};
}

ReportEntry outcome(std::string check, bool passed, std::optional<std::string> witness = std::nullopt,
                    std::optional<std::string> value = std::nullopt) {
  return ReportEntry{std::move(check), passed ? "PASS" : "FAIL", std::move(witness), std::move(value)};
}

void finish(Report& r) {
  for (const auto& e : r.results)
    if (e.status == "FAIL") r.exit_code = kExitCheckFailed;
}

Session load(const Options& o) {
  if (o.input.empty()) throw Error(ErrorCode::InvalidArgs, "--input FILE is required");
  std::ifstream in(o.input);
  if (!in) throw Error(ErrorCode::InvalidArgs, "cannot read '" + o.input + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_session(buffer.str(), o.characteristic);
}

const std::string& required(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(ErrorCode::InvalidArgs, std::string(flag) + " is required");
  return value;
}

AlgebraElement element(const Session& s, const std::string& text) {
  return make_element(s.algebra, parse_expression(text, s.algebra->ring()));
}

// Splits on top-level commas.
std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

std::string show(const AlgebraElement& a) { return a.to_string(); }
std::string show(const Polynomial& f, const Session& s) { return to_string(f, s.algebra->order()); }

void add_verification(Report& r, const VerificationReport& v, const ExponentialMap& phi, const std::string& prefix) {
  for (const auto& c : v.checks) {
    std::optional<std::string> witness;
    std::optional<std::string> value;
    if (c.witness) witness = to_string(*c.witness, phi.algebra()->order());
    if (!c.detail.empty()) value = "generator " + c.detail;
    r.results.push_back(outcome(prefix + c.check, c.passed, witness, value));
  }
  r.results.push_back(info(prefix + "trivial", v.trivial ? "true" : "false"));
}

Report cmd_verify(const Options& o) {
  Session s = load(o);
  const ExponentialMap& phi = s.map(required(o.map, "--map"));
  Report r{"verify", {{"input", o.input}, {"map", o.map}}, {}, kExitOk};
  add_verification(r, verify(phi), phi, "");
  return r;
}

Report cmd_degree(const Options& o) {
  Session s = load(o);
  const ExponentialMap& phi = s.map(required(o.map, "--map"));
  AlgebraElement a = element(s, required(o.expr, "--expr"));
  Report r{"degree", {{"input", o.input}, {"map", o.map}, {"expr", o.expr}}, {}, kExitOk};
  auto d = phi_degree(phi, a);
  r.results.push_back(info("phi_degree", d ? std::to_string(*d) : "-inf"));
  return r;
}

Report cmd_invariant(const Options& o) {
  Session s = load(o);
  const ExponentialMap& phi = s.map(required(o.map, "--map"));
  AlgebraElement a = element(s, required(o.expr, "--expr"));
  Report r{"invariant", {{"input", o.input}, {"map", o.map}, {"expr", o.expr}}, {}, kExitOk};
  Polynomial moved = apply(phi, a) - a.rep().rebase(s.algebra->ring_u());
  r.results.push_back(outcome("invariant", moved.is_zero(),
                              moved.is_zero() ? std::nullopt : std::optional<std::string>(show(moved, s))));
  return r;
}

Report cmd_homogenize(const Options& o) {
  Session s = load(o);
  const ExponentialMap& phi = s.map(required(o.map, "--map"));
  const WeightVector& w = s.weight(required(o.weights, "--weights"));
  Report r{"homogenize", {{"input", o.input}, {"map", o.map}, {"weights", o.weights}}, {}, kExitOk};
  VerificationReport v = verify(phi);
  if (!v.passed()) {
    add_verification(r, v, phi, "");
    return r;
  }
  FiltrationContext ctx(s.algebra, w);
  HomogenizedMap bar = homogenize_map(ctx, phi);
  const AlgebraPtr& graded = ctx.graded_model();
  r.results.push_back(info("grdegU", fraction_text(bar.grdegU)));
  if (!graded->is_free()) r.results.push_back(info("graded_relation", to_string(graded->relation(), graded->order())));
  const auto& names = s.algebra->ring()->names();
  for (std::size_t g = 0; g < names.size(); ++g) {
    r.results.push_back(info("S(" + names[g] + ")", to_string(bar.supports[g])));
    r.results.push_back(info("image(" + names[g] + ")", to_string(bar.map.image(g), graded->order())));
  }
  add_verification(r, bar.report, bar.map, "homogenized.");
  return r;
}

Report cmd_express(const Options& o) {
  Session s = load(o);
  const ExponentialMap& phi = s.map(required(o.map, "--map"));
  AlgebraElement a = element(s, required(o.expr, "--expr"));
  Report r{"express", {{"input", o.input}, {"map", o.map}, {"expr", o.expr}}, {}, kExitOk};
  if (!o.xmin.empty()) r.inputs.emplace_back("xmin", o.xmin);

  AlgebraElement x_min = scalar(s.algebra, 0);
  if (o.xmin.empty()) {
    MinimalDegree m = min_positive_degree(phi, 100, o.seed);
    x_min = m.element;
    r.results.push_back(info("x_min", show(x_min) + " (heuristic minimum)"));
  } else {
    x_min = element(s, o.xmin);
    r.results.push_back(info("x_min", show(x_min)));
  }
  LocalizationExpression e = express_in_localization(phi, x_min, a);
  r.results.push_back(info("n", std::to_string(*phi_degree(phi, x_min))));
  r.results.push_back(info("c", show(e.c)));
  r.results.push_back(info("m", std::to_string(e.m)));
  bool all_invariant = true;
  for (std::size_t i = 0; i < e.h.size(); ++i) {
    r.results.push_back(info("h[" + std::to_string(i) + "]", show(e.h[i])));
    all_invariant = all_invariant && is_invariant(phi, e.h[i]);
  }
  r.results.push_back(outcome("coefficients_invariant", all_invariant));
  AlgebraElement diff = evaluate(e, x_min) - e.c.pow(e.m) * a;
  r.results.push_back(outcome("round_trip", diff.is_zero(),
                              diff.is_zero() ? std::nullopt : std::optional<std::string>(show(diff))));
  return r;
}

Report cmd_intersect(const Options& o) {
  Session s = load(o);
  Report r{"intersect",
           {{"input", o.input},
            {"gens1", required(o.gens1, "--gens1")},
            {"gens2", required(o.gens2, "--gens2")},
            {"max_degree", std::to_string(o.max_degree)}},
           {},
           kExitOk};
  auto parse_gens = [&](const std::string& list) {
    std::vector<AlgebraElement> out;
    for (const auto& piece : split_list(list)) out.push_back(element(s, piece));
    return out;
  };
  auto basis = subalgebra_intersection_bounded(parse_gens(o.gens1), parse_gens(o.gens2), o.max_degree);
  r.results.push_back(info("dimension", std::to_string(basis.size())));
  for (std::size_t i = 0; i < basis.size(); ++i)
    r.results.push_back(info("basis[" + std::to_string(i) + "]", show(basis[i])));
  return r;
}

Report cmd_factor(const Options& o) {
  Session s = load(o);
  const WeightVector& w = s.weight(required(o.weights, "--weights"));
  Polynomial g = parse_expression(required(o.expr, "--expr"), s.algebra->ring());
  Report r{"factor", {{"input", o.input}, {"expr", o.expr}, {"weights", o.weights}}, {}, kExitOk};
  const auto [z, t] = locate_zt(g, w);
  HomogFactorization f = weighted_homog_factor(g, w, z, t);
  r.results.push_back(info("lambda", f.lambda.to_string()));
  r.results.push_back(info("z", s.algebra->ring()->name(z)));
  r.results.push_back(info("t", s.algebra->ring()->name(t)));
  r.results.push_back(info("n", std::to_string(f.z_power)));
  r.results.push_back(info("m", std::to_string(f.t_power)));
  std::string mu = "[";
  for (std::size_t i = 0; i < f.mu.size(); ++i) mu += (i ? ", " : "") + f.mu[i].to_string();
  r.results.push_back(info("mu", mu + "]"));
  r.results.push_back(outcome("re_expands", expand(f, s.algebra->ring(), z, t) == g));
  return r;
}

Report cmd_catalog(const Options& o) {
  Report r{"catalog", {}, {}, kExitOk};
  if (!o.entry.empty()) r.inputs.emplace_back("entry", o.entry);
  if (o.characteristic) r.inputs.emplace_back("char", std::to_string(*o.characteristic));
  r.inputs.emplace_back("max_degree", std::to_string(o.max_degree));
  std::vector<std::string> names = o.entry.empty() ? catalog_names() : std::vector<std::string>{o.entry};
  FactOptions options{o.max_degree, o.seed, 20};
  for (const auto& name : names) {
    if (o.entry.empty() && name == "char2_plane" && o.characteristic && *o.characteristic != 2) continue;
    if (o.entry.empty() && name == "example2" && o.characteristic == 0u) continue;
    CatalogEntry e = catalog_entry(name, o.characteristic);
    r.results.push_back(info(name, "field char " + std::to_string(e.algebra->field().characteristic())));
    for (const auto& f : e.run(options))
      r.results.push_back(outcome(name + ": " + f.name, f.passed, std::nullopt,
                                  f.detail.empty() ? std::nullopt : std::optional<std::string>(f.detail)));
  }
  return r;
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream os;
  for (const auto& e : report.results) {
    os << e.status << ' ' << e.check;
    if (e.value) os << " = " << *e.value;
    if (e.witness) os << (e.value ? "; witness: " : ": ") << *e.witness;
    os << '\n';
  }
  return os.str();
}

std::string render_json(const Report& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.inputs) j["inputs"][k] = v;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& e : report.results) {
    nlohmann::ordered_json item;
    item["check"] = e.check;
    item["status"] = e.status;
    if (e.witness) item["witness"] = *e.witness;
    if (e.value) item["value"] = *e.value;
    j["results"].push_back(std::move(item));
  }
  j["exit_code"] = report.exit_code;
  return j.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exponential maps on finitely presented domains", "akit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::uint64_t characteristic = 0;
  app.add_option("--input", o.input, "Session file");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "Seed for randomized searches");
  app.add_option("--max-degree", o.max_degree, "Degree bound for linear algebra")->check(CLI::NonNegativeNumber);
  CLI::Option* char_opt = app.add_option("--char", characteristic, "Override the field characteristic");

  struct Command {
    const char* name;
    const char* help;
    Report (*handler)(const Options&);
  };
  const Command commands[] = {
      {"verify", "Check the exponential-map axioms", cmd_verify},
      {"degree", "phi-degree of an element", cmd_degree},
      {"invariant", "Invariance of an element", cmd_invariant},
      {"homogenize", "Homogenize a map along a weight filtration", cmd_homogenize},
      {"express", "Write an element over the invariants localized at c", cmd_express},
      {"intersect", "Bounded intersection of two subalgebras", cmd_intersect},
      {"factor", "Factor a weighted-homogeneous polynomial in z, t", cmd_factor},
      {"catalog", "Run the built-in example suites", cmd_catalog},
  };
  std::vector<std::pair<CLI::App*, Report (*)(const Options&)>> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    subs.emplace_back(sub, c.handler);
    const std::string name = c.name;
    if (name == "verify" || name == "degree" || name == "invariant" || name == "homogenize" || name == "express")
      sub->add_option("--map", o.map, "Map name");
    if (name == "degree" || name == "invariant" || name == "express" || name == "factor")
      sub->add_option("--expr", o.expr, "Element");
    if (name == "express") sub->add_option("--xmin", o.xmin, "Element of minimal positive degree");
    if (name == "homogenize" || name == "factor") sub->add_option("--weights", o.weights, "Weight vector name");
    if (name == "intersect") {
      sub->add_option("--gens1", o.gens1, "Comma-separated generators");
      sub->add_option("--gens2", o.gens2, "Comma-separated generators");
    }
    if (name == "catalog") sub->add_option("--entry", o.entry, "Entry name");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "akit: " << e.what() << '\n';
    return kExitUsage;
  }
  if (char_opt->count() > 0) o.characteristic = characteristic;

  Report report;
  for (const auto& [sub, handler] : subs) {
    if (!sub->parsed()) continue;
    report.command = sub->get_name();
    try {
      report = handler(o);
      finish(report);
    } catch (const Error& e) {
      report.results.push_back(ReportEntry{"error", "ERROR", std::nullopt, std::string(e.what())});
      report.exit_code = kExitUsage;
      err << "akit: " << e.what() << '\n';
    }
  }
  out << (o.format == "json" ? render_json(report) : render_text(report));
  return report.exit_code;
}

}  // namespace akit::cli
