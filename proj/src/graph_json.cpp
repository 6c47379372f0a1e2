#include "linkpoly/graph_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace linkpoly {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& source) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw InputError(source + ": malformed JSON");
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Multigraph parse_graph_json(const std::string& text, const std::string& source,
                            std::optional<AttrKind> expected) {
  const json doc = parse_json(text, source);
  if (!doc.is_object())
    throw InputError(source + ": top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
    throw InputError(source + ": missing integer field \"vertices\"");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw InputError(source + ": missing array field \"edges\"");

  const int vertices = doc["vertices"].get<int>();
  if (vertices < 0)
    throw InputError(source + ": \"vertices\" must be nonnegative");

  std::optional<AttrKind> kind;
  const auto& edges = doc["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = source + ": edges[" + std::to_string(i) + "]";
    const auto& e = edges[i];
    if (!e.is_object()) throw InputError(where + ": must be an object");
    AttrKind this_kind;
    if (e.contains("sign"))
      this_kind = AttrKind::sign;
    else if (e.contains("color"))
      this_kind = AttrKind::color;
    else if (e.contains("label"))
      this_kind = AttrKind::label;
    else
      throw InputError(where +
                       ": needs exactly one of \"sign\", \"color\", \"label\"");
    const int tags = int(e.contains("sign")) + int(e.contains("color")) +
                     int(e.contains("label"));
    if (tags != 1)
      throw InputError(where +
                       ": needs exactly one of \"sign\", \"color\", \"label\"");
    if (kind && *kind != this_kind)
      throw InputError(where + ": attribute kind differs from earlier edges");
    kind = this_kind;
  }
  if (!kind) kind = expected.value_or(AttrKind::sign);
  if (expected && *kind != *expected) {
    const char* names[] = {"sign", "color", "label"};
    throw InputError(source + ": expected edges carrying \"" +
                     names[static_cast<int>(*expected)] + "\" attributes");
  }

  Multigraph g(vertices, *kind);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = source + ": edges[" + std::to_string(i) + "]";
    const auto& e = edges[i];
    if (!e.contains("id") || !e["id"].is_string())
      throw InputError(where + ": missing string field \"id\"");
    if (!e.contains("u") || !e["u"].is_number_integer() || !e.contains("v") ||
        !e["v"].is_number_integer())
      throw InputError(where + ": missing integer fields \"u\", \"v\"");
    const std::string id = e["id"].get<std::string>();
    const int u = e["u"].get<int>();
    const int v = e["v"].get<int>();
    try {
      switch (*kind) {
        case AttrKind::sign: {
          if (!e["sign"].is_string())
            throw InputError(where + ": \"sign\" must be \"+\" or \"-\"");
          const std::string s = e["sign"].get<std::string>();
          if (s != "+" && s != "-")
            throw InputError(where + ": \"sign\" must be \"+\" or \"-\"");
          g.add_signed_edge(id, u, v, s == "+" ? Sign::plus : Sign::minus);
          break;
        }
        case AttrKind::color:
          if (!e["color"].is_string())
            throw InputError(where + ": \"color\" must be a string");
          g.add_colored_edge(id, u, v, e["color"].get<std::string>());
          break;
        case AttrKind::label:
          if (!e["label"].is_string())
            throw InputError(where + ": \"label\" must be a string");
          g.add_labeled_edge(id, u, v, e["label"].get<std::string>());
          break;
      }
    } catch (const InputError& err) {
      throw InputError(where + ": " + err.what());
    }
  }
  return g;
}

Multigraph load_graph_file(const std::string& path,
                           std::optional<AttrKind> expected) {
  return parse_graph_json(read_file(path), path, expected);
}

ReplacementSpec parse_replacement_spec_json(const std::string& text,
                                            const std::string& source) {
  const json doc = parse_json(text, source);
  if (!doc.is_object())
    throw InputError(source + ": top level must be an object");
  ReplacementSpec spec;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string where = source + ": edge \"" + it.key() + "\"";
    const auto& entry = it.value();
    if (!entry.is_object() || !entry.contains("kind") ||
        !entry["kind"].is_string() || !entry.contains("n") ||
        !entry["n"].is_number_integer())
      throw InputError(where +
                       ": needs {\"kind\": \"chain\"|\"sheaf\", \"n\": int}");
    const std::string kind = entry["kind"].get<std::string>();
    if (kind != "chain" && kind != "sheaf")
      throw InputError(where + ": \"kind\" must be \"chain\" or \"sheaf\"");
    const int n = entry["n"].get<int>();
    if (n == 0)
      throw InputError(where + ": replacement integer must be nonzero");
    spec[it.key()] = {kind == "chain" ? ReplKind::chain : ReplKind::sheaf, n};
  }
  return spec;
}

ReplacementSpec load_replacement_spec_file(const std::string& path) {
  return parse_replacement_spec_json(read_file(path), path);
}

ColorWeights parse_color_weights_json(const std::string& text,
                                      const std::string& source,
                                      const Registry& reg) {
  const json doc = parse_json(text, source);
  if (!doc.is_object())
    throw InputError(source + ": top level must be an object");
  ColorWeights cw;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string where = source + ": color \"" + it.key() + "\"";
    const auto& entry = it.value();
    if (!entry.is_object() || !entry.contains("x") ||
        !entry["x"].is_string() || !entry.contains("y") ||
        !entry["y"].is_string())
      throw InputError(where + ": needs {\"x\": \"<poly>\", \"y\": \"<poly>\"}");
    try {
      cw.xy.emplace(it.key(),
                    std::make_pair(parse_poly(reg, entry["x"].get<std::string>()),
                                   parse_poly(reg, entry["y"].get<std::string>())));
    } catch (const InputError& err) {
      throw InputError(where + ": " + err.what());
    }
  }
  return cw;
}

ColorWeights load_color_weights_file(const std::string& path,
                                     const Registry& reg) {
  return parse_color_weights_json(read_file(path), path, reg);
}

std::string graph_to_json(const Multigraph& g) {
  json doc;
  doc["vertices"] = g.vertex_count();
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) {
    json edge;
    edge["id"] = e.id;
    edge["u"] = e.u;
    edge["v"] = e.v;
    switch (g.attr_kind()) {
      case AttrKind::sign:
        edge["sign"] = e.sign == Sign::plus ? "+" : "-";
        break;
      case AttrKind::color:
        edge["color"] = e.tag;
        break;
      case AttrKind::label:
        edge["label"] = e.tag;
        break;
    }
    doc["edges"].push_back(std::move(edge));
  }
  return doc.dump(2);
}

}  // namespace linkpoly
