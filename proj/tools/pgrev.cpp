// pgrev: command-line front end for priority graphs and preference models.
//
// Exit codes: 0 success, 1 postulate violation or failed demo, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "pgrev/report.hpp"

namespace {

using namespace pgrev;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Loaded = std::variant<PGraph, PreferenceModel>;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Loaded load(const std::string& path) {
  const std::string text = slurp(path);
  try {
    if (detect_kind(text) == FileKind::Model) return parse_model_file(text);
    return parse_graph_file(text);
  } catch (const FileError& e) {
    throw InputError(path + ":" + e.what());
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

PGraph load_graph(const std::string& path) {
  Loaded l = load(path);
  if (auto* g = std::get_if<PGraph>(&l)) return *g;
  throw InputError(path + ": expected a graph file");
}

const Signature& signature_of(const Loaded& l) {
  return std::visit([](const auto& x) -> const Signature& { return x.signature(); }, l);
}

Formula parse_formula(const std::string& text, const Signature& sig) {
  try {
    return parse(text, sig);
  } catch (const ParseError& e) {
    throw InputError("formula '" + text + "': " + e.what() + " at column " + std::to_string(e.position() + 1));
  }
}

struct Output {
  bool json = false;
  bool dot = false;
};

void emit(const PreferenceModel& m, const Output& o) {
  if (o.json) std::cout << to_json(m).dump(2) << "\n";
  else if (o.dot) std::cout << to_dot(m);
  else std::cout << dump_model(m);
}

void emit(const PGraph& g, const Output& o) {
  if (o.json) std::cout << to_json(g).dump(2) << "\n";
  else if (o.dot) std::cout << to_dot(g);
  else std::cout << dump_graph(g);
}

int finish_demo(const DemoReport& r, const Output& o) {
  if (o.json) std::cout << to_json(r).dump(2) << "\n";
  else std::cout << render(r);
  return r.verdict() ? kOk : kViolation;
}

std::vector<Postulate> postulate_list(const std::string& text) {
  std::vector<Postulate> out;
  if (text.empty() || text == "all") return {kAllPostulates.begin(), kAllPostulates.end()};
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    auto p = postulate_from_name(item);
    if (!p) throw InputError("unknown postulate '" + item + "'");
    out.push_back(*p);
  }
  return out;
}

std::vector<Formula> pool_list(const std::string& text, const Signature& sig) {
  if (text.empty()) {
    if (sig.atoms() == two_atoms().atoms()) return default_pool();
    std::vector<Formula> out;
    for (std::size_t a = 0; a < sig.size(); ++a) out.push_back(Formula::atom(a));
    return out;
  }
  std::vector<Formula> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ';');) out.push_back(parse_formula(item, sig));
  return out;
}

int cmd_induce(const std::string& path, const Output& o) {
  emit(canonical_model(load_graph(path)), o);
  return kOk;
}

int cmd_revise(const std::string& path, const std::string& op, const std::string& by, const Output& o) {
  const Loaded in = load(path);
  const Formula f = parse_formula(by, signature_of(in));
  if (const auto* g = std::get_if<PGraph>(&in)) {
    if (op == "natural") throw InputError("natural revision has no graph transformation; revise a model file instead");
    if (op == "lex") throw InputError("lex revises models; use --op prefix for its graph counterpart");
    emit(TransformationRegistry::builtin().get(op)(*g, f), o);
    return kOk;
  }
  const auto& m = std::get<PreferenceModel>(in);
  if (op == "prefix") throw InputError("prefix transforms graphs; use --op lex on a model file");
  if (op == "lex") emit(lex_revise(m, f).model, o);
  else if (op == "natural") emit(natural_revise(m, f).model, o);
  else emit(null_change(m, f).model, o);
  return kOk;
}

PreferenceModel as_model(const Loaded& l) {
  if (const auto* m = std::get_if<PreferenceModel>(&l)) return *m;
  return canonical_model(std::get<PGraph>(l));
}

int cmd_check(const std::string& before_path, const std::string& after_path, const std::string& by,
              const std::string& postulates, bool conditions, const Output& o) {
  const Loaded before = load(before_path), after = load(after_path);
  if (!(signature_of(before) == signature_of(after))) throw InputError("before and after use different atoms");
  const Formula f = parse_formula(by, signature_of(before));
  const PreferenceModel m = as_model(before), m2 = as_model(after);
  if (!same_worlds(m, m2)) throw InputError("before and after have different worlds");

  bool all = true;
  json records = json::array();
  for (Postulate p : postulate_list(postulates)) {
    const auto rep = check(p, m, f, m2);
    all = all && rep.holds;
    if (o.json) records.push_back(to_json(rep, m));
    else std::cout << render(rep, m);
  }
  if (conditions) {
    const auto* g = std::get_if<PGraph>(&before);
    const auto* h = std::get_if<PGraph>(&after);
    if (!g || !h) throw InputError("--conditions needs graph files for --before and --after");
    for (Condition c : kAllConditions) {
      const auto rep = check_condition(c, *g, f, *h, g->signature());
      if (o.json) records.push_back(to_json(rep, *g, *h));
      else std::cout << render(rep, *g, *h);
    }
  }
  if (o.json) std::cout << records.dump(2) << "\n";
  return all ? kOk : kViolation;
}

int cmd_equiv(const std::string& a, const std::string& b, const Output& o) {
  const PGraph g1 = load_graph(a), g2 = load_graph(b);
  if (!(g1.signature() == g2.signature())) throw InputError("graphs use different atoms");
  const bool eq = graphs_equivalent(g1, g2, g1.signature());
  if (o.json) std::cout << json{{"equivalent", eq}}.dump() << "\n";
  else std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
  return eq ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief revision over priority graphs and preference models"};
  app.require_subcommand(1);
  Output out;
  auto add_output = [&](CLI::App* sub) {
    sub->add_flag("--json", out.json, "machine-readable output");
    sub->add_flag("--dot", out.dot, "Graphviz output");
  };

  std::string file, file2, op = "lex", by, postulates, graph_path, pool, atoms = "p q";
  std::string demo_name;
  bool conditions = false;
  std::size_t bound = 2;

  auto* induce = app.add_subcommand("induce", "print the model a graph induces over all valuations");
  induce->add_option("graph", file, "graph file")->required();
  add_output(induce);

  auto* revise = app.add_subcommand("revise", "revise a model or transform a graph");
  revise->add_option("file", file, "model or graph file")->required();
  revise->add_option("--op", op, "lex | natural | null | prefix")
      ->check(CLI::IsMember({"lex", "natural", "null", "prefix"}));
  revise->add_option("--by", by, "revision formula")->required();
  add_output(revise);

  auto* chk = app.add_subcommand("check", "check postulates on a before/after pair");
  chk->add_option("--before", file, "model or graph file")->required();
  chk->add_option("--after", file2, "model or graph file")->required();
  chk->add_option("--by", by, "revision formula")->required();
  chk->add_option("--postulates", postulates, "comma-separated list, default all");
  chk->add_flag("--conditions", conditions, "also evaluate the graph conditions (graph inputs only)");
  add_output(chk);

  auto* equiv = app.add_subcommand("equiv", "do two graphs induce the same order");
  equiv->add_option("first", file, "graph file")->required();
  equiv->add_option("second", file2, "graph file")->required();
  add_output(equiv);

  auto* demo = app.add_subcommand("demo", "run a reproduction");
  demo->add_option("name", demo_name, "fact-cb | fact-min | harmony")
      ->required()
      ->check(CLI::IsMember({"fact-cb", "fact-min", "harmony"}));
  demo->add_option("--graph", graph_path, "graph file (fact-min)");
  demo->add_option("--by", by, "revision formula (fact-min)");
  demo->add_option("--bound", bound, "node bound (harmony)");
  demo->add_option("--pool", pool, "';'-separated formulas (harmony)");
  demo->add_option("--atoms", atoms, "space-separated atoms (harmony)");
  add_output(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*induce) return cmd_induce(file, out);
    if (*revise) return cmd_revise(file, op, by, out);
    if (*chk) return cmd_check(file, file2, by, postulates, conditions, out);
    if (*equiv) return cmd_equiv(file, file2, out);
    if (demo_name == "fact-cb") return finish_demo(demo_fact_cb(), out);
    if (demo_name == "fact-min") {
      if (graph_path.empty() || by.empty()) throw InputError("fact-min needs --graph and --by");
      const PGraph g = load_graph(graph_path);
      return finish_demo(demo_fact_min(g, parse_formula(by, g.signature()), g.signature()), out);
    }
    std::istringstream in(atoms);
    std::vector<std::string> names;
    for (std::string a; in >> a;) names.push_back(a);
    const Signature sig(names);
    return finish_demo(sweep_harmony(bound, sig, pool_list(pool, sig)), out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
