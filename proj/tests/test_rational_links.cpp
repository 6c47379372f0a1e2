#include "doctest.h"

#include <random>

#include "linkpoly/rational_links.hpp"

using namespace linkpoly;

TEST_CASE("word validation") {
  RationalWord empty;
  CHECK_THROWS_AS(empty.validate(), InputError);
  RationalWord zero{{1, 0, 2}};
  CHECK_THROWS_AS(zero.validate(), InputError);
  RationalWord ok{{1, -2, 3}};
  ok.validate();
  CHECK(ok.horizontal());
  CHECK_FALSE(RationalWord{{1, 2}}.horizontal());
}

TEST_CASE("torus brackets") {
  Registry reg = make_registry();
  const QRing br = QRing::bracket(reg);
  CHECK(bracket_torus2(1, br) == parse_poly(reg, "-A^-3"));
  CHECK(bracket_torus2(2, br) == parse_poly(reg, "-A^4 - A^-4"));
  CHECK(bracket_torus2(3, br) == parse_poly(reg, "A^7 - A^3 - A^-5"));
  // mirror of the unknot diagram
  CHECK(bracket_torus2(-1, br) == parse_poly(reg, "-A^3"));
}

TEST_CASE("transfer golden values") {
  Registry reg = make_registry();
  const QRing br = QRing::bracket(reg);
  CHECK(bracket_rational(RationalWord{{1, 1}}, br) ==
        parse_poly(reg, "-A^4 - A^-4"));
  CHECK(bracket_rational(RationalWord{{1, 1, 1}}, br) ==
        parse_poly(reg, "-A^5 - A^-3 + A^-7"));
  CHECK(bracket_rational(RationalWord{{2}}, br) ==
        parse_poly(reg, "-A^4 - A^-4"));
  CHECK(bracket_rational(RationalWord{{3}}, br) ==
        parse_poly(reg, "A^7 - A^3 - A^-5"));
  // figure-eight knot
  CHECK(bracket_rational(RationalWord{{1, 1, 1, 1}}, br) ==
        parse_poly(reg, "A^8 - A^4 + 1 - A^-4 + A^-8"));
}

TEST_CASE("twist closed form") {
  Registry reg = make_registry();
  const QRing br = QRing::bracket(reg);
  CHECK(bracket_twist(1, 1, br) == parse_poly(reg, "-A^4 - A^-4"));
  // the 2-crossing unknot diagram evaluates to d
  CHECK(bracket_twist(1, -1, br) == br.d);
  std::mt19937_64 rng(103);
  QMemo memo;
  for (int i = 0; i < 12; ++i) {
    int m1 = 0, m2 = 0;
    while (m1 == 0) m1 = static_cast<int>(rng() % 7) - 3;
    while (m2 == 0) m2 = static_cast<int>(rng() % 7) - 3;
    const RationalWord w{{m1, m2}};
    CHECK(bracket_twist(m1, m2, br) == bracket_rational(w, br));
    CHECK(bracket_twist(m1, m2, br) == bracket_rational_oracle(w, br, &memo));
  }
}

TEST_CASE("associated graphs have the documented shape") {
  auto [g1, spec1] = build_rational_graph(RationalWord{{5}});
  CHECK(g1.edge_count() == 1);
  CHECK(spec1.begin()->second.kind == ReplKind::sheaf);
  CHECK(spec1.begin()->second.n == 5);

  auto [g2, spec2] = build_rational_graph(RationalWord{{3, 4}});
  CHECK(g2.vertex_count() == 2);
  CHECK(g2.edge_count() == 2);
  CHECK(spec2.at("e1").kind == ReplKind::chain);
  CHECK(spec2.at("e2").kind == ReplKind::sheaf);

  auto [g3, spec3] = build_rational_graph(RationalWord{{1, 1, 1}});
  CHECK(g3.vertex_count() == 3);
  CHECK(g3.edge_count() == 3);
  CHECK(spec3.at("e1").kind == ReplKind::sheaf);
  CHECK(spec3.at("e2").kind == ReplKind::chain);
  CHECK(spec3.at("e3").kind == ReplKind::sheaf);
}

TEST_CASE("transfer equals the oracle for short words") {
  Registry reg = make_registry();
  const QRing br = QRing::bracket(reg);
  QMemo memo;
  const int values[] = {-2, -1, 1, 2};
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> index(static_cast<std::size_t>(k), 0);
    for (;;) {
      RationalWord w;
      for (int i = 0; i < k; ++i)
        w.terms.push_back(values[index[static_cast<std::size_t>(i)]]);
      CHECK(bracket_rational(w, br) == bracket_rational_oracle(w, br, &memo));
      int i = 0;
      for (; i < k; ++i) {
        if (++index[static_cast<std::size_t>(i)] < 4) break;
        index[static_cast<std::size_t>(i)] = 0;
      }
      if (i == k) break;
    }
  }
}

TEST_CASE("theta brackets") {
  Registry reg = make_registry();
  const QRing br = QRing::bracket(reg);
  CHECK(bracket_theta(1, 1, 1, br) == parse_poly(reg, "A^7 - A^3 - A^-5"));
  std::mt19937_64 rng(107);
  for (int i = 0; i < 10; ++i) {
    int m[3];
    for (int& x : m) {
      x = 0;
      while (x == 0) x = static_cast<int>(rng() % 7) - 3;
    }
    CHECK(bracket_theta(m[0], m[1], m[2], br) ==
          bracket_theta(m[2], m[1], m[0], br));
  }
}

TEST_CASE("mirrored words invert A") {
  Registry reg = make_registry();
  const QRing br = QRing::bracket(reg);
  const MultiPoly a = MultiPoly::variable(reg, "A");
  std::mt19937_64 rng(109);
  for (int i = 0; i < 15; ++i) {
    RationalWord w;
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int j = 0; j < k; ++j) {
      int m = 0;
      while (m == 0) m = static_cast<int>(rng() % 7) - 3;
      w.terms.push_back(m);
    }
    RationalWord negated = w;
    for (int& m : negated.terms) m = -m;
    CHECK(substitute(bracket_rational(w, br), {{"A", pow(a, -1)}}) ==
          bracket_rational(negated, br));
  }
}
