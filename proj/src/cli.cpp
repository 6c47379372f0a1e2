#include "linkpoly/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "linkpoly/chain_sheaf.hpp"
#include "linkpoly/colored_tutte.hpp"
#include "linkpoly/graph_json.hpp"
#include "linkpoly/multigraph.hpp"
#include "linkpoly/polyring.hpp"
#include "linkpoly/rational_links.hpp"
#include "linkpoly/replacement.hpp"
#include "linkpoly/signed_tutte.hpp"
#include "linkpoly/verify.hpp"

namespace linkpoly {

namespace {

RationalWord parse_word(const std::string& text) {
  RationalWord word;
  std::istringstream in(text);
  std::string item;
  int position = 0;
  while (std::getline(in, item, ',')) {
    ++position;
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      word.terms.push_back(value);
    } catch (const std::exception&) {
      throw InputError("word term " + std::to_string(position) +
                       " is not an integer: \"" + item + "\"");
    }
  }
  if (word.terms.empty()) throw InputError("word must be nonempty");
  for (std::size_t i = 0; i < word.terms.size(); ++i)
    if (word.terms[i] == 0)
      throw InputError("word term " + std::to_string(i + 1) + " is zero");
  return word;
}

std::string poly_json(const MultiPoly& p) {
  nlohmann::json doc;
  std::vector<int> support;
  {
    std::vector<char> seen;
    for (const auto& [e, c] : p.terms()) {
      if (e.size() > seen.size()) seen.resize(e.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) seen[i] = 1;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (seen[i]) support.push_back(static_cast<int>(i));
  }
  doc["vars"] = nlohmann::json::array();
  for (int i : support) doc["vars"].push_back(p.registry()->name(i));
  doc["terms"] = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) {
    std::string key = "(";
    for (std::size_t s = 0; s < support.size(); ++s) {
      if (s) key += ',';
      const std::size_t i = static_cast<std::size_t>(support[s]);
      key += std::to_string(i < e.size() ? e[i] : 0);
    }
    key += ')';
    doc["terms"][key] = c.str();
  }
  return doc.dump();
}

std::string jones_json(const JonesValue& value) {
  nlohmann::json doc;
  doc["variable"] = "t";
  doc["terms"] = nlohmann::json::object();
  for (const auto& [qexp, c] : value.terms) {
    long num = qexp, den = 4;
    while (num % 2 == 0 && den % 2 == 0) {
      num /= 2;
      den /= 2;
    }
    std::string key = std::to_string(num);
    if (den != 1) key += "/" + std::to_string(den);
    doc["terms"][key] = c.str();
  }
  return doc.dump();
}

struct Options {
  std::string graph_path;
  std::string spec_path;
  std::string colors_path;
  std::string eval;
  std::string word;
  long writhe = 0;
  std::string suite = "small";
  bool json = false;
};

void emit(std::ostream& out, const MultiPoly& p, bool json) {
  out << (json ? poly_json(p) : p.to_string()) << "\n";
}

MultiPoly bracket_of(const Options& opt, const Registry& reg, QMemo& memo) {
  Multigraph g = load_graph_file(opt.graph_path, AttrKind::sign);
  if (!opt.spec_path.empty()) {
    const ReplacementSpec spec = load_replacement_spec_file(opt.spec_path);
    g = build_replaced(g, spec).graph;
  }
  return kauffman_bracket(g, QRing::symbolic(reg), &memo);
}

WParams eval_params(const Options& opt, const Registry& reg) {
  WParams params = WParams::symbolic(reg);
  if (opt.eval.empty()) return params;
  std::istringstream in(opt.eval);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw InputError("--eval entry \"" + item + "\" is not var=poly");
    const std::string var = item.substr(0, eq);
    const MultiPoly value = parse_poly(reg, item.substr(eq + 1));
    if (var == "t")
      params.t = value;
    else if (var == "z1")
      params.z1 = value;
    else if (var == "z2")
      params.z2 = value;
    else
      throw InputError("--eval variable \"" + var +
                       "\" must be one of t, z1, z2");
  }
  return params;
}

int dispatch(const std::string& verb, const Options& opt, std::ostream& out) {
  const Registry reg = make_registry();
  QMemo memo;

  if (verb == "q") {
    const Multigraph g = load_graph_file(opt.graph_path, AttrKind::sign);
    emit(out, q_poly(g, QRing::symbolic(reg), &memo), opt.json);
  } else if (verb == "w") {
    const Multigraph g = load_graph_file(opt.graph_path, AttrKind::color);
    if (opt.colors_path.empty())
      throw InputError("w requires --colors <colors.json>");
    const ColorWeights cw = load_color_weights_file(opt.colors_path, reg);
    emit(out, w_recursive(g, cw, eval_params(opt, reg)), opt.json);
  } else if (verb == "bracket") {
    emit(out, bracket_of(opt, reg, memo), opt.json);
  } else if (verb == "jones") {
    const JonesValue value = jones(bracket_of(opt, reg, memo), opt.writhe);
    out << (opt.json ? jones_json(value) : value.to_string()) << "\n";
  } else if (verb == "chain") {
    const Multigraph g = load_graph_file(opt.graph_path, AttrKind::label);
    emit(out, ch_poly(g, reg), opt.json);
  } else if (verb == "sheaf") {
    const Multigraph g = load_graph_file(opt.graph_path, AttrKind::label);
    emit(out, sh_poly(g, reg), opt.json);
  } else if (verb == "flow") {
    const Multigraph g = load_graph_file(opt.graph_path);
    emit(out, flow_poly(g, reg), opt.json);
  } else if (verb == "tension") {
    const Multigraph g = load_graph_file(opt.graph_path);
    emit(out, tension_poly(g, reg), opt.json);
  } else if (verb == "replace") {
    const Multigraph g = load_graph_file(opt.graph_path, AttrKind::sign);
    if (opt.spec_path.empty())
      throw InputError("replace requires --spec <spec.json>");
    const ReplacementSpec spec = load_replacement_spec_file(opt.spec_path);
    out << graph_to_json(build_replaced(g, spec).graph) << "\n";
  } else if (verb == "rational") {
    const RationalWord word = parse_word(opt.word);
    emit(out, bracket_rational(word, QRing::bracket(reg)), opt.json);
  } else if (verb == "theta") {
    const RationalWord word = parse_word(opt.word);
    if (word.terms.size() != 3)
      throw InputError("theta takes exactly three comma-separated integers");
    emit(out,
         bracket_theta(word.terms[0], word.terms[1], word.terms[2],
                       QRing::bracket(reg)),
         opt.json);
  } else if (verb == "verify") {
    const VerifySuite suite =
        opt.suite == "full" ? VerifySuite::full : VerifySuite::small;
    bool all_pass = true;
    int index = 0;
    for (const CheckResult& r : run_verification(suite)) {
      ++index;
      out << (r.pass ? "[ok]  " : "[FAIL] ") << index << ". " << r.name
          << " -- " << r.detail << " (" << std::fixed << std::setprecision(2)
          << r.seconds << "s)\n";
      all_pass = all_pass && r.pass;
    }
    if (!all_pass) return 2;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact Tutte-type graph polynomials and Kauffman brackets"};
  app.require_subcommand(1);

  Options opt;
  auto add_graph_verb = [&](const std::string& name, const std::string& help,
                            bool with_spec = false) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", opt.graph_path, "graph JSON file")->required();
    sub->add_flag("--json", opt.json, "machine-readable term map");
    if (with_spec)
      sub->add_option("--spec", opt.spec_path, "replacement spec JSON file");
    return sub;
  };

  add_graph_verb("q", "Q-polynomial of a signed graph");
  CLI::App* w = add_graph_verb("w", "W-polynomial of a colored graph");
  w->add_option("--colors", opt.colors_path, "color weights JSON file");
  w->add_option("--eval", opt.eval, "bindings, e.g. t=d,z1=d,z2=d");
  add_graph_verb("bracket", "Kauffman bracket of a signed graph", true);
  CLI::App* jones_cmd =
      add_graph_verb("jones", "Jones polynomial of a signed graph", true);
  jones_cmd->add_option("--writhe", opt.writhe, "writhe of the diagram")
      ->required();
  add_graph_verb("chain", "chain polynomial of a labeled graph");
  add_graph_verb("sheaf", "sheaf polynomial of a labeled graph");
  add_graph_verb("flow", "nowhere-zero flow polynomial");
  add_graph_verb("tension", "nowhere-zero tension polynomial");
  add_graph_verb("replace", "build the replaced graph", true);

  CLI::App* rational =
      app.add_subcommand("rational", "Kauffman bracket of a rational link");
  rational->add_option("word", opt.word, "comma-separated nonzero integers")
      ->required();
  rational->add_flag("--json", opt.json, "machine-readable term map");

  CLI::App* theta =
      app.add_subcommand("theta", "Kauffman bracket of a theta link");
  theta->add_option("word", opt.word, "m1,m2,m3")->required();
  theta->add_flag("--json", opt.json, "machine-readable term map");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", opt.suite, "small or full")
      ->check(CLI::IsMember({"small", "full"}))
      ->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.push_back("linkpoly");
  for (const std::string& a : args) argv_storage.push_back(a);
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), opt, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace linkpoly
