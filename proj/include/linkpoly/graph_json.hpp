#pragma once

// JSON file formats:
//   graph:   {"vertices": 3, "edges": [{"id":"e1","u":0,"v":1,"sign":"+"}]}
//            with "color":"c1" or "label":"a" instead of "sign"; exactly one
//            attribute kind per file.
//   spec:    {"e1": {"kind": "chain", "n": 2}, "e2": {"kind": "sheaf", "n": -3}}
//   colors:  {"c1": {"x": "A", "y": "B"}, ...} with canonical polynomial text.

#include <optional>
#include <string>

#include "linkpoly/colored_tutte.hpp"
#include "linkpoly/multigraph.hpp"
#include "linkpoly/replacement.hpp"

namespace linkpoly {

Multigraph parse_graph_json(const std::string& text, const std::string& source,
                            std::optional<AttrKind> expected = std::nullopt);
Multigraph load_graph_file(const std::string& path,
                           std::optional<AttrKind> expected = std::nullopt);

ReplacementSpec parse_replacement_spec_json(const std::string& text,
                                            const std::string& source);
ReplacementSpec load_replacement_spec_file(const std::string& path);

ColorWeights parse_color_weights_json(const std::string& text,
                                      const std::string& source,
                                      const Registry& reg);
ColorWeights load_color_weights_file(const std::string& path,
                                     const Registry& reg);

std::string graph_to_json(const Multigraph& g);

}  // namespace linkpoly
