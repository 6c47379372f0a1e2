#include "linkpoly/colored_tutte.hpp"

namespace linkpoly {

const std::pair<MultiPoly, MultiPoly>& ColorWeights::weights(
    const std::string& color) const {
  auto it = xy.find(color);
  if (it == xy.end())
    throw InputError("no weights registered for color \"" + color + "\"");
  return it->second;
}

WParams WParams::symbolic(const Registry& reg) {
  return {MultiPoly::variable(reg, "t"), MultiPoly::variable(reg, "z1"),
          MultiPoly::variable(reg, "z2")};
}

namespace {

MultiPoly t_power(const WParams& params, long n) {
  return pow(params.t, n);  // n < 0 (only E_0) requires a unit t
}

void check_colored(const Multigraph& g) {
  if (g.attr_kind() != AttrKind::color)
    throw InputError("W-polynomial requires a colored graph");
}

}  // namespace

MultiPoly w_recursive(const Multigraph& g, const ColorWeights& cw,
                      const WParams& params) {
  check_colored(g);
  // loops first, then bridges, then the smallest ordinary edge
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) {
      const auto& [x, y] = cw.weights(e.tag);
      return (x * params.z2 + y) * w_recursive(g.deleted(e.id), cw, params);
    }
  }
  for (const Edge& e : g.edges()) {
    if (g.classify(e.id) == EdgeClass::bridge) {
      const auto& [x, y] = cw.weights(e.tag);
      return (x + params.z1 * y) * w_recursive(g.contracted(e.id), cw, params);
    }
  }
  if (g.edge_count() > 0) {
    const Edge e = g.edges().front();
    const auto& [x, y] = cw.weights(e.tag);
    return x * w_recursive(g.contracted(e.id), cw, params) +
           y * w_recursive(g.deleted(e.id), cw, params);
  }
  return t_power(params, g.vertex_count() - 1);
}

MultiPoly w_state_sum(const Multigraph& g, const ColorWeights& cw,
                      const WParams& params, int cap) {
  check_colored(g);
  const Registry& reg = params.t.registry();
  const int k = g.components();
  MultiPoly total(reg);
  g.for_each_spanning_subgraph(
      [&](const SubgraphReport& report) {
        MultiPoly term = MultiPoly::one(reg);
        for (int i = 0; i < g.edge_count(); ++i) {
          const Edge& e = g.edges()[static_cast<std::size_t>(i)];
          const auto& [x, y] = cw.weights(e.tag);
          term *= (report.edges & (std::uint64_t{1} << i)) ? x : y;
        }
        term *= pow(params.z1, report.components - k);
        term *= pow(params.z2, report.nullity);
        total += term;
      },
      cap);
  return t_power(params, k - 1) * total;
}

MultiPoly w_forest_expansion(const Multigraph& g, const ColorWeights& cw,
                             const WParams& params,
                             const std::optional<std::vector<int>>& order_rank) {
  check_colored(g);
  const Registry& reg = params.t.registry();
  const int k = g.components();
  MultiPoly total(reg);
  auto handle = [&](const ForestReport& report) {
    MultiPoly term = MultiPoly::one(reg);
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edges()[static_cast<std::size_t>(i)];
      const auto& [x, y] = cw.weights(e.tag);
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (report.internally_active & bit)
        term *= x + params.z1 * y;
      else if (report.externally_active & bit)
        term *= x * params.z2 + y;
      else if (report.internally_inactive & bit)
        term *= x;
      else
        term *= y;
    }
    total += term;
  };
  if (order_rank)
    g.for_each_spanning_forest(*order_rank, handle);
  else
    g.for_each_spanning_forest(handle);
  return t_power(params, k - 1) * total;
}

MultiPoly w_disjoint_union_checked(const Multigraph& g1, const Multigraph& g2,
                                   const ColorWeights& cw,
                                   const WParams& params) {
  const MultiPoly combined =
      w_recursive(Multigraph::disjoint_union(g1, g2), cw, params);
  const MultiPoly expected =
      params.t * w_recursive(g1, cw, params) * w_recursive(g2, cw, params);
  if (combined != expected)
    throw InternalError("disjoint union product law violated");
  return combined;
}

MultiPoly w_one_point_union_checked(const Multigraph& g1, int v1,
                                    const Multigraph& g2, int v2,
                                    const ColorWeights& cw,
                                    const WParams& params) {
  const MultiPoly combined =
      w_recursive(Multigraph::one_point_union(g1, v1, g2, v2), cw, params);
  const MultiPoly expected =
      w_recursive(g1, cw, params) * w_recursive(g2, cw, params);
  if (combined != expected)
    throw InternalError("one-point union product law violated");
  return combined;
}

}  // namespace linkpoly
