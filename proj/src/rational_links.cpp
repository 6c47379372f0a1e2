#include "linkpoly/rational_links.hpp"

#include <string>

namespace linkpoly {

void RationalWord::validate() const {
  if (terms.empty()) throw InputError("rational word must be nonempty");
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i] == 0)
      throw InputError("rational word term " + std::to_string(i + 1) +
                       " is zero");
}

namespace {

void check_bracket_ring(const QRing& ring) {
  if (ring.tag != "brA")
    throw InputError("rational link brackets require the bracket ring");
}

struct Vec2 {
  MultiPoly a, b;
};

struct Mat2 {
  MultiPoly m11, m12, m21, m22;
};

Vec2 mul(const Vec2& v, const Mat2& m) {
  return {v.a * m.m11 + v.b * m.m21, v.a * m.m12 + v.b * m.m22};
}

// Stage matrix for a chain of length `a` followed by a sheaf of width `b`:
//   [ X^a B^b d                  X^a (Y^b - B^b) / d                       ]
//   [ (X^a - A^a) B^b d          (X^a - A^a)(Y^b - B^b)/d + A^a Y^b d      ]
Mat2 stage_matrix(const QRing& ring, int a, int b) {
  const MultiPoly xa = pow(ring.X, a);
  const MultiPoly aa = pow(ring.A, a);
  const MultiPoly yb = pow(ring.Y, b);
  const MultiPoly bb = pow(ring.B, b);
  const MultiPoly y_diff_over_d = exact_div(yb - bb, ring.d);
  const MultiPoly x_diff = xa - aa;
  return Mat2{xa * bb * ring.d, xa * y_diff_over_d, x_diff * bb * ring.d,
              x_diff * y_diff_over_d + aa * yb * ring.d};
}

}  // namespace

MultiPoly bracket_torus2(int m1, const QRing& ring) {
  check_bracket_ring(ring);
  if (m1 == 0) throw InputError("torus parameter must be nonzero");
  const MultiPoly bm = pow(ring.B, m1);
  return exact_div(pow(ring.Y, m1) - bm, ring.d) + bm * ring.d;
}

MultiPoly bracket_twist(int m1, int m2, const QRing& ring) {
  check_bracket_ring(ring);
  if (m1 == 0 || m2 == 0)
    throw InputError("twist parameters must be nonzero");
  const Registry& reg = ring.reg;
  const MultiPoly a = ring.A;
  const MultiPoly neg_a4_inv = -pow(a, -4);  // -A^-4
  const MultiPoly neg_a4 = -pow(a, 4);       // -A^4
  const MultiPoly one = MultiPoly::one(reg);
  const MultiPoly front = pow(a, m1 - m2);
  const MultiPoly first =
      front * (pow(neg_a4_inv, m1) + pow(neg_a4, m2) - one);
  const MultiPoly denom = pow(a, -4) + MultiPoly::constant(reg, 2) + pow(a, 4);
  const MultiPoly brace = pow(neg_a4_inv, m1 - m2) - pow(neg_a4_inv, m1) -
                          pow(neg_a4, m2) + one;
  return first + exact_div(front * brace, denom);
}

MultiPoly bracket_theta(int m1, int m2, int m3, const QRing& ring) {
  check_bracket_ring(ring);
  if (m1 == 0 || m2 == 0 || m3 == 0)
    throw InputError("theta parameters must be nonzero");
  const MultiPoly x1 = pow(ring.X, m1), a1 = pow(ring.A, m1);
  const MultiPoly y2 = pow(ring.Y, m2), b2 = pow(ring.B, m2);
  const MultiPoly x3 = pow(ring.X, m3), a3 = pow(ring.A, m3);
  const MultiPoly chain3_y = exact_div(x3 - a3, ring.d);
  const MultiPoly chain1_mix = a1 * ring.d + exact_div(x1 - a1, ring.d);
  return x1 * b2 * chain3_y +
         chain1_mix * exact_div(y2 - b2, ring.d) * chain3_y +
         chain1_mix * y2 * a3;
}

MultiPoly bracket_rational(const RationalWord& word, const QRing& ring) {
  check_bracket_ring(ring);
  word.validate();
  const auto& m = word.terms;
  const std::size_t k = m.size();
  if (k == 1) return bracket_torus2(m[0], ring);
  if (k == 2) return bracket_twist(m[0], m[1], ring);

  Vec2 state{MultiPoly(ring.reg), MultiPoly(ring.reg)};
  long d_exponent = 0;
  std::size_t first_stage = 0;
  if (word.horizontal()) {
    // k = 2n+1: X0 = (B^m1 d^2, Y^m1 - B^m1), stages (m_2i, m_2i+1)
    const MultiPoly bm = pow(ring.B, m[0]);
    state = {bm * ring.d * ring.d, pow(ring.Y, m[0]) - bm};
    d_exponent = static_cast<long>((k - 1) / 2) + 1;
    first_stage = 1;
  } else {
    // k = 2n+2: X0 = ((X^m1-A^m1) B^m2 d^2,
    //                 A^m1 Y^m2 d^2 + (X^m1-A^m1)(Y^m2-B^m2))
    const MultiPoly x_diff = pow(ring.X, m[0]) - pow(ring.A, m[0]);
    const MultiPoly bm = pow(ring.B, m[1]);
    const MultiPoly ym = pow(ring.Y, m[1]);
    state = {x_diff * bm * ring.d * ring.d,
             pow(ring.A, m[0]) * ym * ring.d * ring.d + x_diff * (ym - bm)};
    d_exponent = static_cast<long>((k - 2) / 2) + 2;
    first_stage = 2;
  }
  for (std::size_t i = first_stage; i + 1 < k; i += 2)
    state = mul(state, stage_matrix(ring, m[i], m[i + 1]));
  return exact_div(state.a + state.b, pow(ring.d, d_exponent));
}

std::pair<Multigraph, ReplacementSpec> build_rational_graph(
    const RationalWord& word) {
  word.validate();
  const auto& m = word.terms;
  const std::size_t k = m.size();

  auto edge_id = [&](std::size_t i) {
    std::string digits = std::to_string(i + 1);
    if (k >= 10 && digits.size() < 2) digits.insert(0, 1, '0');
    return "e" + digits;
  };

  ReplacementSpec spec;
  if (word.horizontal()) {
    // vertices u=0, v_0..v_n = 1..n+1; sheaf m1 at (0,1), then per stage i:
    // chain m_2i at (i, i+1), sheaf m_2i+1 at (0, i+1)
    const std::size_t n = (k - 1) / 2;
    Multigraph g(static_cast<int>(n) + 2, AttrKind::sign);
    g.add_signed_edge(edge_id(0), 0, 1, Sign::plus);
    spec[edge_id(0)] = {ReplKind::sheaf, m[0]};
    for (std::size_t i = 1; i <= n; ++i) {
      g.add_signed_edge(edge_id(2 * i - 1), static_cast<int>(i),
                        static_cast<int>(i) + 1, Sign::plus);
      spec[edge_id(2 * i - 1)] = {ReplKind::chain, m[2 * i - 1]};
      g.add_signed_edge(edge_id(2 * i), 0, static_cast<int>(i) + 1,
                        Sign::plus);
      spec[edge_id(2 * i)] = {ReplKind::sheaf, m[2 * i]};
    }
    return {std::move(g), std::move(spec)};
  }
  // vertical: chain m1 and sheaf m2 in parallel at (0,1), then per stage i:
  // chain m_2i+1 at (i, i+1), sheaf m_2i+2 at (0, i+1)
  const std::size_t n = (k - 2) / 2;
  Multigraph g(static_cast<int>(n) + 2, AttrKind::sign);
  g.add_signed_edge(edge_id(0), 0, 1, Sign::plus);
  spec[edge_id(0)] = {ReplKind::chain, m[0]};
  g.add_signed_edge(edge_id(1), 0, 1, Sign::plus);
  spec[edge_id(1)] = {ReplKind::sheaf, m[1]};
  for (std::size_t i = 1; i <= n; ++i) {
    g.add_signed_edge(edge_id(2 * i), static_cast<int>(i),
                      static_cast<int>(i) + 1, Sign::plus);
    spec[edge_id(2 * i)] = {ReplKind::chain, m[2 * i]};
    g.add_signed_edge(edge_id(2 * i + 1), 0, static_cast<int>(i) + 1,
                      Sign::plus);
    spec[edge_id(2 * i + 1)] = {ReplKind::sheaf, m[2 * i + 1]};
  }
  return {std::move(g), std::move(spec)};
}

MultiPoly bracket_rational_oracle(const RationalWord& word, const QRing& ring,
                                  QMemo* memo) {
  check_bracket_ring(ring);
  auto [graph, spec] = build_rational_graph(word);
  return q_poly(build_replaced(graph, spec).graph, ring, memo);
}

}  // namespace linkpoly
