#include "linkpoly/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace linkpoly {

namespace {

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  int groups() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (find(i) == i) ++n;
    return n;
  }

private:
  std::vector<int> parent_;
};

}  // namespace

Multigraph::Multigraph(int vertices, AttrKind kind)
    : vertices_(vertices), kind_(kind) {
  if (vertices < 0) throw InputError("vertex count must be nonnegative");
}

void Multigraph::add_edge(Edge e) {
  if (e.id.empty()) throw InputError("edge id must be nonempty");
  if (e.u < 0 || e.u >= vertices_ || e.v < 0 || e.v >= vertices_)
    throw InputError("edge \"" + e.id + "\": endpoint out of range");
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), e,
      [](const Edge& a, const Edge& b) { return a.id < b.id; });
  if (it != edges_.end() && it->id == e.id)
    throw InputError("duplicate edge id \"" + e.id + "\"");
  edges_.insert(it, std::move(e));
}

void Multigraph::add_signed_edge(std::string id, int u, int v, Sign s) {
  if (kind_ != AttrKind::sign)
    throw InputError("edge \"" + id + "\": graph does not carry signs");
  add_edge(Edge{std::move(id), u, v, s, {}});
}

void Multigraph::add_colored_edge(std::string id, int u, int v,
                                  std::string color) {
  if (kind_ != AttrKind::color)
    throw InputError("edge \"" + id + "\": graph does not carry colors");
  add_edge(Edge{std::move(id), u, v, Sign::plus, std::move(color)});
}

void Multigraph::add_labeled_edge(std::string id, int u, int v,
                                  std::string label) {
  if (kind_ != AttrKind::label)
    throw InputError("edge \"" + id + "\": graph does not carry labels");
  add_edge(Edge{std::move(id), u, v, Sign::plus, std::move(label)});
}

int Multigraph::edge_index(std::string_view id) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& a, std::string_view b) { return a.id < b; });
  if (it == edges_.end() || it->id != id)
    throw InputError("unknown edge id \"" + std::string(id) + "\"");
  return static_cast<int>(it - edges_.begin());
}

const Edge& Multigraph::edge(std::string_view id) const {
  return edges_[static_cast<std::size_t>(edge_index(id))];
}

bool Multigraph::has_edge(std::string_view id) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& a, std::string_view b) { return a.id < b; });
  return it != edges_.end() && it->id == id;
}

bool Multigraph::is_loop(int edge_index) const {
  const Edge& e = edges_[static_cast<std::size_t>(edge_index)];
  return e.u == e.v;
}

EdgeClass Multigraph::classify(std::string_view id) const {
  const int idx = edge_index(id);
  if (is_loop(idx)) return EdgeClass::loop;
  UnionFind without(vertices_);
  for (int i = 0; i < edge_count(); ++i) {
    if (i == idx) continue;
    const Edge& e = edges_[static_cast<std::size_t>(i)];
    without.unite(e.u, e.v);
  }
  return without.groups() > components() ? EdgeClass::bridge
                                         : EdgeClass::ordinary;
}

Multigraph Multigraph::deleted(std::string_view id) const {
  const int idx = edge_index(id);
  Multigraph out(vertices_, kind_);
  out.edges_.reserve(edges_.size() - 1);
  for (int i = 0; i < edge_count(); ++i)
    if (i != idx) out.edges_.push_back(edges_[static_cast<std::size_t>(i)]);
  return out;
}

Multigraph Multigraph::contracted(std::string_view id) const {
  const int idx = edge_index(id);
  const Edge& e = edges_[static_cast<std::size_t>(idx)];
  if (e.u == e.v) return deleted(id);
  const int a = std::min(e.u, e.v);
  const int b = std::max(e.u, e.v);
  auto remap = [a, b](int w) {
    if (w == b) return a;
    return w > b ? w - 1 : w;
  };
  Multigraph out(vertices_ - 1, kind_);
  out.edges_.reserve(edges_.size() - 1);
  for (int i = 0; i < edge_count(); ++i) {
    if (i == idx) continue;
    Edge ne = edges_[static_cast<std::size_t>(i)];
    ne.u = remap(ne.u);
    ne.v = remap(ne.v);
    out.edges_.push_back(std::move(ne));
  }
  return out;
}

int Multigraph::components_of_subset(std::uint64_t edge_mask) const {
  if (edge_count() > 63)
    throw InputError("edge subset masks support at most 63 edges");
  UnionFind uf(vertices_);
  for (int i = 0; i < edge_count(); ++i) {
    if (edge_mask & (std::uint64_t{1} << i)) {
      const Edge& e = edges_[static_cast<std::size_t>(i)];
      uf.unite(e.u, e.v);
    }
  }
  return uf.groups();
}

int Multigraph::components() const {
  UnionFind uf(vertices_);
  for (const Edge& e : edges_) uf.unite(e.u, e.v);
  return uf.groups();
}

std::pair<int, int> Multigraph::components_nullity() const {
  const int k = components();
  return {k, edge_count() - vertices_ + k};
}

void Multigraph::for_each_spanning_subgraph(
    const std::function<void(const SubgraphReport&)>& fn, int cap) const {
  const int m = edge_count();
  if (m > cap || m > 63)
    throw InputError("enumeration cap exceeded: " + std::to_string(m) +
                     " edges, cap " + std::to_string(std::min(cap, 63)));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const int k = components_of_subset(mask);
    const int size = std::popcount(mask);
    fn(SubgraphReport{mask, k, size - vertices_ + k});
  }
}

void Multigraph::for_each_spanning_forest(
    const std::function<void(const ForestReport&)>& fn) const {
  std::vector<int> rank(static_cast<std::size_t>(edge_count()));
  std::iota(rank.begin(), rank.end(), 0);
  for_each_spanning_forest(rank, fn);
}

void Multigraph::for_each_spanning_forest(
    const std::vector<int>& order_rank,
    const std::function<void(const ForestReport&)>& fn) const {
  const int m = edge_count();
  if (m > kDefaultEnumerationCap)
    throw InputError("forest enumeration cap exceeded: " + std::to_string(m) +
                     " edges");
  if (static_cast<int>(order_rank.size()) != m)
    throw InputError("edge order must rank every edge");
  const int kg = components();
  const int forest_size = vertices_ - kg;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) != forest_size) continue;
    if (components_of_subset(mask) != kg) continue;

    // adjacency of the forest
    std::vector<std::vector<std::pair<int, int>>> adj(
        static_cast<std::size_t>(vertices_));
    for (int i = 0; i < m; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      const Edge& e = edges_[static_cast<std::size_t>(i)];
      adj[static_cast<std::size_t>(e.u)].push_back({i, e.v});
      adj[static_cast<std::size_t>(e.v)].push_back({i, e.u});
    }

    ForestReport report;
    report.forest = mask;

    for (int i = 0; i < m; ++i) {
      const Edge& e = edges_[static_cast<std::size_t>(i)];
      if (mask & (std::uint64_t{1} << i)) {
        // side of e.u in the forest minus e; the cut consists of all graph
        // edges crossing it
        std::vector<char> side(static_cast<std::size_t>(vertices_), 0);
        std::vector<int> stack = {e.u};
        side[static_cast<std::size_t>(e.u)] = 1;
        while (!stack.empty()) {
          const int x = stack.back();
          stack.pop_back();
          for (auto [ei, y] : adj[static_cast<std::size_t>(x)]) {
            if (ei == i) continue;
            if (!side[static_cast<std::size_t>(y)]) {
              side[static_cast<std::size_t>(y)] = 1;
              stack.push_back(y);
            }
          }
        }
        bool smallest = true;
        for (int j = 0; j < m && smallest; ++j) {
          const Edge& g = edges_[static_cast<std::size_t>(j)];
          if (side[static_cast<std::size_t>(g.u)] !=
              side[static_cast<std::size_t>(g.v)])
            if (order_rank[static_cast<std::size_t>(j)] <
                order_rank[static_cast<std::size_t>(i)])
              smallest = false;
        }
        (smallest ? report.internally_active : report.internally_inactive) |=
            std::uint64_t{1} << i;
      } else {
        // the unique cycle of F + e: e itself plus the forest path u..v
        bool smallest = true;
        if (e.u != e.v) {
          std::vector<int> via(static_cast<std::size_t>(vertices_), -1);
          std::vector<int> prev(static_cast<std::size_t>(vertices_), -1);
          std::vector<int> stack = {e.u};
          std::vector<char> seen(static_cast<std::size_t>(vertices_), 0);
          seen[static_cast<std::size_t>(e.u)] = 1;
          while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (auto [ei, y] : adj[static_cast<std::size_t>(x)]) {
              if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                via[static_cast<std::size_t>(y)] = ei;
                prev[static_cast<std::size_t>(y)] = x;
                stack.push_back(y);
              }
            }
          }
          for (int x = e.v; x != e.u && smallest;
               x = prev[static_cast<std::size_t>(x)]) {
            if (order_rank[static_cast<std::size_t>(
                    via[static_cast<std::size_t>(x)])] <
                order_rank[static_cast<std::size_t>(i)])
              smallest = false;
          }
        }
        (smallest ? report.externally_active : report.externally_inactive) |=
            std::uint64_t{1} << i;
      }
    }
    fn(report);
  }
}

Multigraph Multigraph::with_signs_flipped() const {
  if (kind_ != AttrKind::sign)
    throw InputError("sign flip requires a signed graph");
  Multigraph out = *this;
  for (Edge& e : out.edges_) e.sign = opposite(e.sign);
  return out;
}

Multigraph Multigraph::disjoint_union(const Multigraph& a,
                                      const Multigraph& b) {
  if (a.kind_ != b.kind_)
    throw InputError("disjoint union requires matching attribute kinds");
  Multigraph out(a.vertices_ + b.vertices_, a.kind_);
  for (const Edge& e : a.edges_) out.add_edge(e);
  for (Edge e : b.edges_) {
    e.u += a.vertices_;
    e.v += a.vertices_;
    out.add_edge(std::move(e));
  }
  return out;
}

Multigraph Multigraph::one_point_union(const Multigraph& a, int va,
                                       const Multigraph& b, int vb) {
  if (a.kind_ != b.kind_)
    throw InputError("one-point union requires matching attribute kinds");
  if (va < 0 || va >= a.vertices_ || vb < 0 || vb >= b.vertices_)
    throw InputError("one-point union: vertex out of range");
  Multigraph out(a.vertices_ + b.vertices_ - 1, a.kind_);
  for (const Edge& e : a.edges_) out.add_edge(e);
  auto remap = [&](int w) {
    if (w == vb) return va;
    return a.vertices_ + (w > vb ? w - 1 : w);
  };
  for (Edge e : b.edges_) {
    e.u = remap(e.u);
    e.v = remap(e.v);
    out.add_edge(std::move(e));
  }
  return out;
}

}  // namespace linkpoly
