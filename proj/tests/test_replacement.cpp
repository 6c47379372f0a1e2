#include "doctest.h"

#include <random>

#include "linkpoly/replacement.hpp"

using namespace linkpoly;

namespace {

Multigraph single_edge(Sign s = Sign::plus) {
  Multigraph g(2, AttrKind::sign);
  g.add_signed_edge("e1", 0, 1, s);
  return g;
}

Multigraph random_signed(std::mt19937_64& rng, int max_vertices,
                         int max_edges) {
  const int p = 1 + static_cast<int>(rng() % max_vertices);
  const int m = static_cast<int>(rng() % (max_edges + 1));
  Multigraph g(p, AttrKind::sign);
  for (int i = 0; i < m; ++i)
    g.add_signed_edge("e" + std::to_string(10 + i),
                      static_cast<int>(rng() % p), static_cast<int>(rng() % p),
                      (rng() & 1) ? Sign::plus : Sign::minus);
  return g;
}

ReplacementSpec random_spec(std::mt19937_64& rng, const Multigraph& g, int lo,
                            int hi) {
  ReplacementSpec spec;
  for (const Edge& e : g.edges()) {
    int n = 0;
    while (n == 0) n = lo + static_cast<int>(rng() % (hi - lo + 1));
    spec[e.id] = {(rng() & 1) ? ReplKind::chain : ReplKind::sheaf, n};
  }
  return spec;
}

}  // namespace

TEST_CASE("building replaced graphs") {
  const Multigraph g = single_edge();

  const ReplacedGraph chain3 =
      build_replaced(g, {{"e1", {ReplKind::chain, 3}}});
  CHECK(chain3.graph.vertex_count() == 4);
  CHECK(chain3.graph.edge_count() == 3);
  for (const Edge& e : chain3.graph.edges()) {
    CHECK(e.sign == Sign::plus);
    CHECK(chain3.provenance.at(e.id) == "e1");
  }
  CHECK(chain3.graph.components() == 1);

  const ReplacedGraph sheaf2 =
      build_replaced(g, {{"e1", {ReplKind::sheaf, 2}}});
  CHECK(sheaf2.graph.vertex_count() == 2);
  CHECK(sheaf2.graph.edge_count() == 2);

  // mirror convention: negative n flips the sign
  const ReplacedGraph mirror =
      build_replaced(g, {{"e1", {ReplKind::chain, -2}}});
  CHECK(mirror.graph.vertex_count() == 3);
  CHECK(mirror.graph.edge_count() == 2);
  for (const Edge& e : mirror.graph.edges()) CHECK(e.sign == Sign::minus);

  // chains on loops close into cycles; sheaves on loops stay loops
  Multigraph loop(1, AttrKind::sign);
  loop.add_signed_edge("e1", 0, 0, Sign::plus);
  const ReplacedGraph cycle = build_replaced(loop, {{"e1", {ReplKind::chain, 3}}});
  CHECK(cycle.graph.vertex_count() == 3);
  CHECK(cycle.graph.edge_count() == 3);
  CHECK(cycle.graph.components_nullity() == std::pair<int, int>{1, 1});
  const ReplacedGraph loops = build_replaced(loop, {{"e1", {ReplKind::sheaf, 2}}});
  CHECK(loops.graph.vertex_count() == 1);
  CHECK(loops.graph.edge_count() == 2);

  CHECK_THROWS_AS(build_replaced(g, {{"e1", {ReplKind::chain, 0}}}),
                  InputError);
  CHECK_THROWS_AS(build_replaced(g, ReplacementSpec{}), InputError);
}

TEST_CASE("single-step reduce coefficients") {
  Registry reg = make_registry();
  const QRing ring = QRing::symbolic(reg);

  // chain, n = 1, non-loop: ((X-A)/d, A) = (B, A)
  const auto [cd1, cc1] = chain_reduce(ring, 1, false);
  CHECK(cd1 == ring.B);
  CHECK(cc1 == ring.A);

  // sheaf, n = 1, loop: (B, (Y-B)/d * d) = (B, Y-B)
  const auto [sd1, sc1] = sheaf_reduce(ring, 1, true);
  CHECK(sd1 == ring.B);
  CHECK(sc1 == ring.Y - ring.B);

  // chain, n = 2, non-loop: ((X^2-A^2)/d, A^2) = (2AB + B^2 d, A^2)
  const auto [cd2, cc2] = chain_reduce(ring, 2, false);
  CHECK(cd2 == MultiPoly::constant(reg, 2) * ring.A * ring.B +
                   ring.B * ring.B * ring.d);
  CHECK(cc2 == ring.A * ring.A);
}

TEST_CASE("chain and sheaf weights coincide at n = 1") {
  Registry reg = make_registry();
  const QRing ring = QRing::symbolic(reg);
  const auto [cx, cy] = chain_weights(ring, 1);
  const auto [sx, sy] = sheaf_weights(ring, 1);
  CHECK(cx == sx);
  CHECK(cy == sy);
  CHECK(cx == ring.A);
  CHECK(cy == ring.B);
}

TEST_CASE("replacement via W equals recursion on the replaced graph") {
  Registry reg = make_registry();
  const QRing sym = QRing::symbolic(reg);
  const QRing br = QRing::bracket(reg);
  QMemo memo;
  std::mt19937_64 rng(89);
  for (int i = 0; i < 40; ++i) {
    const Multigraph g = random_signed(rng, 4, 4);
    {
      const ReplacementSpec spec = random_spec(rng, g, 1, 4);
      const MultiPoly direct = q_poly(build_replaced(g, spec).graph, sym, &memo);
      CHECK(direct == q_hat_via_w(g, spec, sym));
      CHECK(direct == q_hat_via_reduction(g, spec, sym));
    }
    {
      const ReplacementSpec spec = random_spec(rng, g, -4, 4);
      const MultiPoly direct = q_poly(build_replaced(g, spec).graph, br, &memo);
      CHECK(direct == q_hat_via_w(g, spec, br));
      CHECK(direct == q_hat_via_reduction(g, spec, br));
    }
  }
}

TEST_CASE("single-edge sheaf matches the bracket of parallel edges") {
  Registry reg = make_registry();
  const QRing sym = QRing::symbolic(reg);
  const MultiPoly a = MultiPoly::variable(reg, "A");

  // sheaf of width 1: x + d*y specializes to -A^-3
  const MultiPoly via_w =
      q_hat_via_w(single_edge(), {{"e1", {ReplKind::sheaf, 1}}}, sym);
  const std::map<std::string, MultiPoly> to_bracket = {
      {"B", pow(a, -1)}, {"d", -(pow(a, 2) + pow(a, -2))}};
  CHECK(substitute(via_w, to_bracket) == -pow(a, -3));

  // sheaf of width 2 gives the Hopf bracket
  const MultiPoly hopf =
      q_hat_via_w(single_edge(), {{"e1", {ReplKind::sheaf, 2}}}, sym);
  CHECK(substitute(hopf, to_bracket) == parse_poly(reg, "-A^4 - A^-4"));
}

TEST_CASE("chain polynomial route") {
  Registry reg = make_registry();
  const QRing sym = QRing::symbolic(reg);

  // single + edge, length 1: equals Q of the edge itself
  CHECK(q_gc_via_chain_poly(single_edge(), {{"e1", 1}}, sym) == sym.X);

  // 2-cycle of + edges, both chains of length 1
  Multigraph cycle(2, AttrKind::sign);
  cycle.add_signed_edge("e1", 0, 1, Sign::plus);
  cycle.add_signed_edge("e2", 0, 1, Sign::plus);
  CHECK(q_gc_via_chain_poly(cycle, {{"e1", 1}, {"e2", 1}}, sym) ==
        q_poly(cycle, sym));

  // negative lengths need the bracket ring
  CHECK_THROWS_AS(q_gc_via_chain_poly(single_edge(), {{"e1", -2}}, sym),
                  InputError);
  CHECK_THROWS_AS(
      q_gc_via_chain_poly(single_edge(Sign::minus), {{"e1", 2}}, sym),
      InputError);

  const QRing br = QRing::bracket(reg);
  CHECK(q_gc_via_chain_poly(single_edge(), {{"e1", -2}}, br) ==
        q_hat_via_w(single_edge(), {{"e1", {ReplKind::chain, -2}}}, br));
}

TEST_CASE("sheaf polynomial route") {
  Registry reg = make_registry();
  const QRing sym = QRing::symbolic(reg);
  const MultiPoly a = MultiPoly::variable(reg, "A");
  const std::map<std::string, MultiPoly> to_bracket = {
      {"B", pow(a, -1)}, {"d", -(pow(a, 2) + pow(a, -2))}};

  // single + edge, width 2: Hopf after specialization
  CHECK(substitute(q_gs_via_sheaf_poly(single_edge(), {{"e1", 2}}, sym),
                   to_bracket) == parse_poly(reg, "-A^4 - A^-4"));

  // single + loop, width 1: Eq of a plain + loop
  Multigraph loop(1, AttrKind::sign);
  loop.add_signed_edge("e1", 0, 0, Sign::plus);
  CHECK(q_gs_via_sheaf_poly(loop, {{"e1", 1}}, sym) == sym.Y);
}

TEST_CASE("homogeneous specs agree with the W route on random graphs") {
  Registry reg = make_registry();
  const QRing sym = QRing::symbolic(reg);
  std::mt19937_64 rng(97);
  for (int i = 0; i < 25; ++i) {
    const int p = 1 + static_cast<int>(rng() % 4);
    const int m = static_cast<int>(rng() % 5);
    Multigraph g(p, AttrKind::sign);
    std::map<std::string, int> numbers;
    ReplacementSpec chains, sheaves;
    for (int j = 0; j < m; ++j) {
      const std::string id = "e" + std::to_string(j);
      g.add_signed_edge(id, static_cast<int>(rng() % p),
                        static_cast<int>(rng() % p), Sign::plus);
      const int n = 1 + static_cast<int>(rng() % 4);
      numbers[id] = n;
      chains[id] = {ReplKind::chain, n};
      sheaves[id] = {ReplKind::sheaf, n};
    }
    CHECK(q_gc_via_chain_poly(g, numbers, sym) == q_hat_via_w(g, chains, sym));
    CHECK(q_gs_via_sheaf_poly(g, numbers, sym) ==
          q_hat_via_w(g, sheaves, sym));
  }
}

TEST_CASE("second Reidemeister cancellation at the bracket level") {
  Registry reg = make_registry();
  const QRing br = QRing::bracket(reg);
  std::mt19937_64 rng(101);
  for (int i = 0; i < 15; ++i) {
    Multigraph g = random_signed(rng, 3, 3);
    const std::string id = "m1";
    const Sign s = (rng() & 1) ? Sign::plus : Sign::minus;
    const int p = g.vertex_count();
    Multigraph with_edge(p + 2, AttrKind::sign);
    for (const Edge& e : g.edges())
      with_edge.add_signed_edge(e.id, e.u, e.v, e.sign);
    const int u = p;  // fresh endpoints keep the cancelling pair a non-loop
    const int v = p + 1;
    with_edge.add_signed_edge(id, u, v, s);

    // chain of one s edge and one -s edge in series = contracted edge
    Multigraph chained(p + 3, AttrKind::sign);
    for (const Edge& e : g.edges())
      chained.add_signed_edge(e.id, e.u, e.v, e.sign);
    chained.add_signed_edge("m1", u, p + 2, s);
    chained.add_signed_edge("m2", p + 2, v, opposite(s));
    CHECK(q_poly(chained, br) == q_poly(with_edge.contracted(id), br));

    // sheaf of one s edge and one -s edge in parallel = deleted edge
    Multigraph doubled(p + 2, AttrKind::sign);
    for (const Edge& e : g.edges())
      doubled.add_signed_edge(e.id, e.u, e.v, e.sign);
    doubled.add_signed_edge("m1", u, v, s);
    doubled.add_signed_edge("m2", u, v, opposite(s));
    CHECK(q_poly(doubled, br) == q_poly(with_edge.deleted(id), br));
  }
}
