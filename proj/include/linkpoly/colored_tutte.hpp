#pragma once

// The W-polynomial of colored graphs, W(G)(t, z1, z2), by three independent
// routes: deletion-contraction, spanning-subgraph state sum, and spanning
// forest activity expansion. Every color carries a weight pair (x, y); the
// recursion is
//   W(E_n) = t^(n-1)
//   bridge:   W(G) = (x + z1*y) * W(G/e)
//   loop:     W(G) = (x*z2 + y) * W(G-e)
//   ordinary: W(G) = x*W(G/e) + y*W(G-e)

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkpoly/multigraph.hpp"
#include "linkpoly/polyring.hpp"

namespace linkpoly {

struct ColorWeights {
  std::map<std::string, std::pair<MultiPoly, MultiPoly>> xy;  // color -> (x, y)

  const std::pair<MultiPoly, MultiPoly>& weights(const std::string& color) const;
};

struct WParams {
  MultiPoly t, z1, z2;

  // t, z1, z2 left symbolic
  static WParams symbolic(const Registry& reg);
  static WParams all(const MultiPoly& value) { return {value, value, value}; }
};

MultiPoly w_recursive(const Multigraph& g, const ColorWeights& cw,
                      const WParams& params);

// t^(k-1) * sum_S {prod_in x}{prod_out y} z1^(k<S>-k) z2^(n<S>)
MultiPoly w_state_sum(const Multigraph& g, const ColorWeights& cw,
                      const WParams& params, int cap = kDefaultEnumerationCap);

// t^(k-1) * sum_F {prod_IA (x+z1*y)}{prod_EA (x*z2+y)}{prod_II x}{prod_EI y};
// the value is independent of the chosen edge order.
MultiPoly w_forest_expansion(
    const Multigraph& g, const ColorWeights& cw, const WParams& params,
    const std::optional<std::vector<int>>& order_rank = std::nullopt);

// Compute W of the disjoint union / one-point union and assert the product
// laws W(G1 u G2) = t*W(G1)*W(G2) and W(G1 . G2) = W(G1)*W(G2).
MultiPoly w_disjoint_union_checked(const Multigraph& g1, const Multigraph& g2,
                                   const ColorWeights& cw,
                                   const WParams& params);
MultiPoly w_one_point_union_checked(const Multigraph& g1, int v1,
                                    const Multigraph& g2, int v2,
                                    const ColorWeights& cw,
                                    const WParams& params);

}  // namespace linkpoly
