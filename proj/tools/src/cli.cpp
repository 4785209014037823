#include "artin_cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "artin/character.hpp"
#include "artin/errors.hpp"
#include "artin/fox.hpp"
#include "artin/groebner.hpp"
#include "artin/kt_module.hpp"
#include "artin/laurent_parse.hpp"
#include "artin/polyhedron.hpp"
#include "artin/sigma1.hpp"
#include "artin_cli/serialize.hpp"

namespace artin::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Result {
  json payload;
  std::string text;
};

struct Options {
  std::string format = "json";
  bool report = false;
  std::string graph_file;
  std::string character;
  std::string mode = "simple-cycle";
  std::string word;
  std::string gen;
  std::vector<std::string> vars;
  std::vector<std::string> gens;
  std::vector<std::string> bipartition;
  bool laurent = false;
  std::string order = "grevlex";
};

struct LoadedGraph {
  ArtinDocument doc;
  std::string digest;
};

LoadedGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return LoadedGraph{parse_artin_document(text), fnv1a_digest(text)};
}

Character load_character(const LoadedGraph& g, const std::string& text) {
  if (!text.empty()) return parse_character(g.doc.graph, text);
  if (!g.doc.character.empty()) return make_character(g.doc.graph, g.doc.character);
  throw InputError("no character given: pass --char or add 'c' lines to the graph file");
}

// Positive multiple with integer values; the character class is unchanged.
Character integral_multiple(const Character& chi) {
  Integer l = 1;
  for (const auto& v : chi.values()) l = lcm(l, Integer(v.get_den()));
  return chi.scaled(Rational(l));
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

Result cmd_sigma1(const Options& o, json& inputs) {
  const auto g = load_graph(o.graph_file);
  inputs[o.graph_file] = g.digest;
  const auto chi = load_character(g, o.character);
  const auto v = decide_sigma1(chi, parse_hypothesis_mode(o.mode));
  return {to_json(v), verdict_text(v)};
}

Result cmd_polyhedron(const Options& o, json& inputs) {
  const auto g = load_graph(o.graph_file);
  inputs[o.graph_file] = g.digest;
  const auto p = complement_polyhedron(g.doc.graph);
  std::string text;
  if (p.pieces.empty()) text = "empty: Sigma^1 is the whole character sphere";
  for (std::size_t i = 0; i < p.pieces.size(); ++i) {
    std::vector<std::string> eqs;
    for (const auto& f : p.pieces[i].forms) {
      std::vector<std::string> terms;
      for (VertexId v = 0; v < f.coefficients.size(); ++v) {
        const auto& c = f.coefficients[v];
        if (c == 0) continue;
        terms.push_back((c == 1 ? "" : to_string(c) + "*") + "chi(" + g.doc.graph.name(v) + ")");
      }
      eqs.push_back(join(terms, " + ") + " = 0");
    }
    if (i) text += "\n";
    text += "piece " + std::to_string(i + 1) + ": " + join(eqs, ", ");
  }
  return {to_json(p), text};
}

Result cmd_hypothesis(const Options& o, json& inputs) {
  const auto g = load_graph(o.graph_file);
  inputs[o.graph_file] = g.digest;
  const auto mode = parse_hypothesis_mode(o.mode);
  const auto& graph = g.doc.graph;
  const bool holds = check_hypothesis(graph, mode);
  std::vector<std::string> cycle;
  for (auto v : hypothesis_witness(graph, mode)) cycle.push_back(graph.name(v));
  json payload{{"holds", holds}, {"mode", std::string(to_string(mode))}, {"witness_cycle", cycle}};
  const std::string text =
      holds ? "hypothesis holds" : "hypothesis fails: cycle " + join(cycle, "-");
  return {payload, text};
}

Result cmd_fox(const Options& o, json&) {
  const auto w = parse_word(o.word);
  const auto d = fox_derivative(w, o.gen);
  json payload = to_json(d);
  payload["word"] = w.to_string();
  payload["generator"] = o.gen;
  return {payload, d.to_string()};
}

Result cmd_jacobian(const Options& o, json& inputs) {
  const auto g = load_graph(o.graph_file);
  inputs[o.graph_file] = g.digest;
  const AbelianizationMap ab(g.doc.graph);
  const auto p = artin_presentation(g.doc.graph);
  const auto j = jacobian(p.generators, p.relators, ab);
  json payload = to_json(j);
  payload["classes"] = ab.classes();
  std::string text;
  for (std::size_t r = 0; r < j.rows(); ++r) {
    std::vector<std::string> row;
    for (const auto& e : j.entries[r]) row.push_back(e.to_string());
    if (r) text += "\n";
    text += j.relators[r].to_string() + ": [" + join(row, ", ") + "]";
  }
  if (text.empty()) text = "no relators";
  return {payload, text};
}

Result cmd_kt_certify(const Options& o, json& inputs) {
  const auto g = load_graph(o.graph_file);
  inputs[o.graph_file] = g.digest;
  const auto chi = integral_multiple(load_character(g, o.character));
  std::optional<std::vector<std::string>> first;
  if (!o.bipartition.empty()) first = o.bipartition;
  const auto forest = dead_edge_forest(chi, first);
  const auto cert = certify_not_finitely_generated(forest, chi);
  json payload = to_json(cert);
  json values = json::object();
  for (VertexId v = 0; v < chi.carrier().vertex_count(); ++v) {
    values[chi.carrier().name(v)] = to_string(chi[v]);
  }
  payload["character"] = values;
  payload["sides"] = json{forest.v_side(), forest.w_side()};
  return {payload, certificate_text(cert)};
}

Result cmd_groebner(const Options& o, json&) {
  if (o.gens.empty()) throw InputError("groebner needs at least one generator");
  std::vector<std::string> vars = o.vars;
  if (vars.empty()) {
    for (const auto& s : o.gens) {
      for (auto& v : collect_variables(s)) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
      }
    }
  }
  std::vector<LaurentPoly<RationalField>> polys;
  for (const auto& s : o.gens) polys.push_back(parse_laurent(s, vars));
  const auto order = parse_monomial_order(o.order);
  const auto basis = buchberger(polys, order);
  const auto report = unit_ideal_report(polys, o.laurent);
  std::vector<std::string> basis_text;
  for (const auto& b : basis) basis_text.push_back(b.to_string());
  json primes = json::object();
  std::vector<std::string> prime_text;
  for (const auto& c : report.primes) {
    const auto key = std::to_string(c.prime);
    primes[key] = c.unit_ideal ? json(*c.unit_ideal) : json(nullptr);
    prime_text.push_back("GF(" + key + ") " +
                         (c.unit_ideal ? (*c.unit_ideal ? "yes" : "no") : "skipped"));
  }
  json payload{{"variables", vars},          {"order", to_string(order)},
               {"laurent", o.laurent},       {"basis", basis_text},
               {"unit_ideal", report.rational}, {"prime_checks", primes}};
  const std::string text = "basis: [" + join(basis_text, ", ") + "]\nunit ideal over QQ: " +
                           (report.rational ? "yes" : "no") + " (" + join(prime_text, ", ") +
                           ")";
  return {payload, text};
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Decide BNS invariant membership for Artin groups and compute the algebra behind it",
               "artin"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--report", o.report, "Wrap JSON output with command, input digests and timing");

  auto* sigma1 = app.add_subcommand("sigma1", "Decide whether [chi] lies in Sigma^1");
  sigma1->add_option("graph", o.graph_file, "Graph file")->required();
  sigma1->add_option("--char", o.character, "Character, e.g. a=1,b=-1/2");
  sigma1->add_option("--mode", o.mode, "Hypothesis mode")
      ->check(CLI::IsMember({"simple-cycle", "strict"}));

  auto* polyhedron = app.add_subcommand("polyhedron", "Rational polyhedron of the complement");
  polyhedron->add_option("graph", o.graph_file, "Graph file")->required();

  auto* hypothesis = app.add_subcommand("hypothesis", "Check the even-cycle hypothesis");
  hypothesis->add_option("graph", o.graph_file, "Graph file")->required();
  hypothesis->add_option("--mode", o.mode, "Hypothesis mode")
      ->check(CLI::IsMember({"simple-cycle", "strict"}));

  auto* fox = app.add_subcommand("fox", "Fox derivative of a free-group word");
  fox->add_option("--word", o.word, "Word, e.g. \"a b^-1 a^2\"")->required();
  fox->add_option("--gen", o.gen, "Generator")->required();

  auto* jac = app.add_subcommand("jacobian", "Abelianized Jacobian of the Artin presentation");
  jac->add_option("graph", o.graph_file, "Graph file")->required();

  auto* kt = app.add_subcommand("kt-certify", "Certify non-finite generation of the K_T module");
  kt->add_option("graph", o.graph_file, "Graph file")->required();
  kt->add_option("--char", o.character, "Character, e.g. a=1,b=-1");
  kt->add_option("--bipartition", o.bipartition, "Vertices of the first side")->delimiter(',');

  auto* gb = app.add_subcommand("groebner", "Groebner basis and unit-ideal test");
  gb->add_option("--vars", o.vars, "Variables, comma separated")->delimiter(',');
  gb->add_option("--gens", o.gens, "Generators")->required()->delimiter(',');
  gb->add_flag("--laurent", o.laurent, "Decide the unit ideal in the Laurent ring");
  gb->add_option("--order", o.order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));

  std::vector<std::string> argv_store{"artin"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, "usage", e.what());
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  json inputs = json::object();
  Result result;
  std::string command;
  try {
    if (sigma1->parsed()) {
      command = "sigma1";
      result = cmd_sigma1(o, inputs);
    } else if (polyhedron->parsed()) {
      command = "polyhedron";
      result = cmd_polyhedron(o, inputs);
    } else if (hypothesis->parsed()) {
      command = "hypothesis";
      result = cmd_hypothesis(o, inputs);
    } else if (fox->parsed()) {
      command = "fox";
      result = cmd_fox(o, inputs);
    } else if (jac->parsed()) {
      command = "jacobian";
      result = cmd_jacobian(o, inputs);
    } else if (kt->parsed()) {
      command = "kt-certify";
      result = cmd_kt_certify(o, inputs);
    } else {
      command = "groebner";
      result = cmd_groebner(o, inputs);
    }
  } catch (const ParseError& e) {
    write_error(err, "parse", e.what());
    return kInputError;
  } catch (const InputError& e) {
    write_error(err, "input", e.what());
    return kInputError;
  } catch (const DomainError& e) {
    write_error(err, "math", e.what());
    return kMathError;
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.format == "text") {
    out << result.text << "\n";
    return kOk;
  }
  if (!o.report) {
    out << result.payload.dump() << "\n";
    return kOk;
  }
  inputs["arguments"] = fnv1a_digest(join(args, "\x1f"));
  json report{{"command", command},
              {"arguments", args},
              {"inputs", inputs},
              {"result", result.payload},
              {"timing_ms", elapsed_ms}};
  out << report.dump() << "\n";
  return kOk;
}

}  // namespace artin::cli
