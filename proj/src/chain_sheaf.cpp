#include "linkpoly/chain_sheaf.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace linkpoly {

namespace {

void check_labeled(const Multigraph& g) {
  if (g.attr_kind() != AttrKind::label)
    throw InputError("chain/sheaf polynomials require a labeled graph");
}

MultiPoly label_var(const Registry& reg, const Edge& e) {
  if (e.tag.empty())
    throw InputError("edge \"" + e.id + "\" has an empty label");
  for (auto reserved : kReservedVars)
    if (e.tag == reserved)
      throw InputError("edge label \"" + e.tag + "\" is a reserved symbol");
  return MultiPoly::variable(reg, e.tag);
}

}  // namespace

MultiPoly ch_poly(const Multigraph& g, const Registry& reg) {
  check_labeled(g);
  if (g.edge_count() == 0) return MultiPoly::one(reg);
  const Edge e = g.edges().front();
  const MultiPoly a = label_var(reg, e);
  const MultiPoly w = MultiPoly::variable(reg, "w");
  if (e.u == e.v) return (a - w) * ch_poly(g.deleted(e.id), reg);
  return (a - MultiPoly::one(reg)) * ch_poly(g.deleted(e.id), reg) +
         ch_poly(g.contracted(e.id), reg);
}

MultiPoly sh_poly(const Multigraph& g, const Registry& reg) {
  check_labeled(g);
  if (g.edge_count() == 0) return MultiPoly::one(reg);
  const Edge e = g.edges().front();
  const MultiPoly a = label_var(reg, e);
  const MultiPoly w = MultiPoly::variable(reg, "w");
  if (g.classify(e.id) == EdgeClass::bridge)
    return (a - w) * sh_poly(g.contracted(e.id), reg);
  return (a - MultiPoly::one(reg)) * sh_poly(g.contracted(e.id), reg) +
         sh_poly(g.deleted(e.id), reg);
}

MultiPoly flow_poly(const Multigraph& g, const Registry& reg) {
  const MultiPoly q = MultiPoly::variable(reg, "q");
  // strip loops: each contributes a factor q-1
  long loops = 0;
  Multigraph rest(g.vertex_count(), g.attr_kind());
  for (const Edge& e : g.edges()) {
    if (e.u == e.v)
      ++loops;
    else if (g.attr_kind() == AttrKind::sign)
      rest.add_signed_edge(e.id, e.u, e.v, e.sign);
    else if (g.attr_kind() == AttrKind::color)
      rest.add_colored_edge(e.id, e.u, e.v, e.tag);
    else
      rest.add_labeled_edge(e.id, e.u, e.v, e.tag);
  }
  const MultiPoly prefactor = pow(q - MultiPoly::one(reg), loops);
  if (rest.edge_count() == 0) return prefactor;
  const Edge e = rest.edges().front();
  if (rest.classify(e.id) == EdgeClass::bridge) return MultiPoly(reg);
  return prefactor * (flow_poly(rest.contracted(e.id), reg) -
                      flow_poly(rest.deleted(e.id), reg));
}

namespace {

MultiPoly chromatic_poly(const Multigraph& g, const Registry& reg) {
  const MultiPoly q = MultiPoly::variable(reg, "q");
  for (const Edge& e : g.edges())
    if (e.u == e.v) return MultiPoly(reg);
  if (g.edge_count() == 0) return pow(q, g.vertex_count());
  const Edge e = g.edges().front();
  return chromatic_poly(g.deleted(e.id), reg) -
         chromatic_poly(g.contracted(e.id), reg);
}

}  // namespace

MultiPoly tension_poly(const Multigraph& g, const Registry& reg) {
  const MultiPoly q = MultiPoly::variable(reg, "q");
  return exact_div(chromatic_poly(g, reg), pow(q, g.components()));
}

namespace {

MultiPoly eps_times_sub(const Multigraph& g, const Registry& reg,
                        std::uint64_t subset, const MultiPoly& counted) {
  const MultiPoly w = MultiPoly::variable(reg, "w");
  const MultiPoly one_minus_w = MultiPoly::one(reg) - w;
  MultiPoly term = substitute(counted, {{"q", one_minus_w}});
  for (int i = 0; i < g.edge_count(); ++i)
    if (subset & (std::uint64_t{1} << i))
      term *= label_var(reg, g.edges()[static_cast<std::size_t>(i)]);
  return term;
}

}  // namespace

MultiPoly ch_from_definition(const Multigraph& g, const Registry& reg,
                             int cap) {
  check_labeled(g);
  const int m = g.edge_count();
  if (m > cap)
    throw InputError("enumeration cap exceeded: " + std::to_string(m) +
                     " edges, cap " + std::to_string(cap));
  MultiPoly total(reg);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    Multigraph minus = g;
    for (int i = 0; i < m; ++i)
      if (subset & (std::uint64_t{1} << i))
        minus = minus.deleted(g.edges()[static_cast<std::size_t>(i)].id);
    total += eps_times_sub(g, reg, subset, flow_poly(minus, reg));
  }
  return total;
}

MultiPoly sh_from_definition(const Multigraph& g, const Registry& reg,
                             int cap) {
  check_labeled(g);
  const int m = g.edge_count();
  if (m > cap)
    throw InputError("enumeration cap exceeded: " + std::to_string(m) +
                     " edges, cap " + std::to_string(cap));
  MultiPoly total(reg);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
    Multigraph contracted = g;
    for (int i = 0; i < m; ++i)
      if (subset & (std::uint64_t{1} << i))
        contracted =
            contracted.contracted(g.edges()[static_cast<std::size_t>(i)].id);
    total += eps_times_sub(g, reg, subset, tension_poly(contracted, reg));
  }
  return total;
}

long count_nowhere_zero_flows(const Multigraph& g, int q) {
  if (q < 1) throw InputError("flow count requires q >= 1");
  const int m = g.edge_count();
  if (m > 16) throw InputError("flow brute force capped at 16 edges");
  if (q == 1) return m == 0 ? 1 : 0;  // no nonzero values available
  std::vector<int> value(static_cast<std::size_t>(m), 1);
  long count = 0;
  for (;;) {
    // conservation at every vertex, edges oriented u -> v
    std::vector<int> net(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int i = 0; i < m; ++i) {
      const Edge& e = g.edges()[static_cast<std::size_t>(i)];
      net[static_cast<std::size_t>(e.u)] += value[static_cast<std::size_t>(i)];
      net[static_cast<std::size_t>(e.v)] -= value[static_cast<std::size_t>(i)];
    }
    bool ok = true;
    for (int x : net)
      if (x % q != 0) ok = false;
    if (ok) ++count;
    // next nowhere-zero assignment in {1..q-1}^m
    int i = 0;
    for (; i < m; ++i) {
      if (value[static_cast<std::size_t>(i)] + 1 <= q - 1) {
        ++value[static_cast<std::size_t>(i)];
        break;
      }
      value[static_cast<std::size_t>(i)] = 1;
    }
    if (i == m) break;
  }
  return count;
}

long count_nowhere_zero_tensions(const Multigraph& g, int q) {
  if (q < 1) throw InputError("tension count requires q >= 1");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n > 12) throw InputError("tension brute force capped at 12 vertices");
  std::vector<int> potential(static_cast<std::size_t>(n), 0);
  std::set<std::vector<int>> tensions;  // induced edge maps, counted once
  for (;;) {
    std::vector<int> f(static_cast<std::size_t>(m), 0);
    bool nowhere_zero = true;
    for (int i = 0; i < m; ++i) {
      const Edge& e = g.edges()[static_cast<std::size_t>(i)];
      const int diff =
          ((potential[static_cast<std::size_t>(e.u)] -
            potential[static_cast<std::size_t>(e.v)]) % q + q) % q;
      f[static_cast<std::size_t>(i)] = diff;
      if (diff == 0) nowhere_zero = false;
    }
    if (nowhere_zero) tensions.insert(std::move(f));
    int i = 0;
    for (; i < n; ++i) {
      if (potential[static_cast<std::size_t>(i)] + 1 <= q - 1) {
        ++potential[static_cast<std::size_t>(i)];
        break;
      }
      potential[static_cast<std::size_t>(i)] = 0;
    }
    if (i == n) break;
  }
  return static_cast<long>(tensions.size());
}

}  // namespace linkpoly
