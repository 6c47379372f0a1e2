#pragma once

// Multigraphs with loops and parallel edges. Graphs are immutable values
// once built: deletion and contraction return new graphs with vertices
// renumbered deterministically (order-preserving), so recursion results and
// memo keys are stable. Each edge carries exactly one attribute: a sign, a
// color, or a label, uniform across the graph.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linkpoly/errors.hpp"

namespace linkpoly {

enum class Sign : int { plus = 1, minus = -1 };

inline Sign opposite(Sign s) {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}
inline int sign_value(Sign s) { return static_cast<int>(s); }

enum class AttrKind { sign, color, label };

enum class EdgeClass { loop, bridge, ordinary };

struct Edge {
  std::string id;
  int u = 0;
  int v = 0;
  Sign sign = Sign::plus;  // meaningful when the graph's kind is sign
  std::string tag;         // color or label otherwise
};

// Edge subset of the spanning subgraph <S>, with its component count and
// nullity |S| - |V| + k<S>.
struct SubgraphReport {
  std::uint64_t edges = 0;
  int components = 0;
  int nullity = 0;
};

// A spanning forest together with its four activity classes with respect to
// a total order on the edges (all fields are edge-index bitmasks).
struct ForestReport {
  std::uint64_t forest = 0;
  std::uint64_t internally_active = 0;
  std::uint64_t internally_inactive = 0;
  std::uint64_t externally_active = 0;
  std::uint64_t externally_inactive = 0;
};

inline constexpr int kDefaultEnumerationCap = 20;

class Multigraph {
public:
  Multigraph(int vertices, AttrKind kind);

  void add_signed_edge(std::string id, int u, int v, Sign s);
  void add_colored_edge(std::string id, int u, int v, std::string color);
  void add_labeled_edge(std::string id, int u, int v, std::string label);

  int vertex_count() const { return vertices_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  AttrKind attr_kind() const { return kind_; }
  // Edges sorted by id; this order is the default total order everywhere.
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::string_view id) const;
  bool has_edge(std::string_view id) const;

  EdgeClass classify(std::string_view id) const;
  bool is_loop(int edge_index) const;

  Multigraph deleted(std::string_view id) const;
  // Contracting a loop deletes it; contracting a non-loop merges its
  // endpoints into the smaller index and shifts later vertices down.
  Multigraph contracted(std::string_view id) const;

  int components() const;
  std::pair<int, int> components_nullity() const;
  int components_of_subset(std::uint64_t edge_mask) const;

  void for_each_spanning_subgraph(
      const std::function<void(const SubgraphReport&)>& fn,
      int cap = kDefaultEnumerationCap) const;

  void for_each_spanning_forest(
      const std::function<void(const ForestReport&)>& fn) const;
  // order_rank[i] is the rank of edge i in the desired total order.
  void for_each_spanning_forest(
      const std::vector<int>& order_rank,
      const std::function<void(const ForestReport&)>& fn) const;

  Multigraph with_signs_flipped() const;

  static Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);
  // Identifies vertex vb of b with vertex va of a.
  static Multigraph one_point_union(const Multigraph& a, int va,
                                    const Multigraph& b, int vb);

private:
  void add_edge(Edge e);
  int edge_index(std::string_view id) const;

  int vertices_ = 0;
  AttrKind kind_ = AttrKind::sign;
  std::vector<Edge> edges_;
};

}  // namespace linkpoly
