#include "linkpoly/signed_tutte.hpp"

#include <numeric>

#include "linkpoly/canonical.hpp"

namespace linkpoly {

QRing QRing::symbolic(const Registry& reg) {
  const MultiPoly A = MultiPoly::variable(reg, "A");
  const MultiPoly B = MultiPoly::variable(reg, "B");
  const MultiPoly d = MultiPoly::variable(reg, "d");
  return QRing{reg, A, B, d, A + B * d, A * d + B, "sym"};
}

QRing QRing::bracket(const Registry& reg) {
  const MultiPoly A = MultiPoly::variable(reg, "A");
  const MultiPoly B = pow(A, -1);
  const MultiPoly d = -(pow(A, 2) + pow(A, -2));
  // X = -A^-3 and Y = -A^3 under this specialization
  return QRing{reg, A, B, d, A + B * d, A * d + B, "brA"};
}

std::optional<MultiPoly> QMemo::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void QMemo::store(const std::string& key, const MultiPoly& value) {
  std::lock_guard lock(mutex_);
  map_.emplace(key, value);
}

std::size_t QMemo::size() const {
  std::lock_guard lock(mutex_);
  return map_.size();
}

namespace {

// d^n where n may be negative and d need not be a unit.
MultiPoly d_power(const QRing& ring, MultiPoly value, long n) {
  if (n >= 0) return value * pow(ring.d, n);
  return exact_div(value, pow(ring.d, -n));
}

// Multiplies off the loop prefactor (X per - loop, Y per + loop) and returns
// the loop-free rest.
MultiPoly strip_loops(const Multigraph& g, const QRing& ring,
                      Multigraph& rest) {
  rest = Multigraph(g.vertex_count(), AttrKind::sign);
  long plus_loops = 0, minus_loops = 0;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v)
      (e.sign == Sign::plus ? plus_loops : minus_loops) += 1;
    else
      rest.add_signed_edge(e.id, e.u, e.v, e.sign);
  }
  return pow(ring.Y, plus_loops) * pow(ring.X, minus_loops);
}

MultiPoly q_literal(const Multigraph& g, const QRing& ring) {
  Multigraph rest(0, AttrKind::sign);
  const MultiPoly factor = strip_loops(g, ring, rest);
  if (rest.edge_count() == 0)
    return d_power(ring, factor, rest.vertex_count() - 1);
  const Edge e = rest.edges().front();  // smallest id
  const MultiPoly del = q_literal(rest.deleted(e.id), ring);
  const MultiPoly con = q_literal(rest.contracted(e.id), ring);
  if (e.sign == Sign::plus) return factor * (ring.B * del + ring.A * con);
  return factor * (ring.A * del + ring.B * con);
}

std::vector<Multigraph> connected_pieces(const Multigraph& g, int& isolated) {
  // order-preserving split; isolated vertices are only counted
  std::vector<int> root(static_cast<std::size_t>(g.vertex_count()));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] =
          root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) root[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::map<int, std::vector<int>> members;
  for (int v = 0; v < g.vertex_count(); ++v)
    members[find(v)].push_back(v);

  std::vector<Multigraph> pieces;
  isolated = 0;
  for (auto& [r, verts] : members) {
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < verts.size(); ++i)
      local[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    Multigraph piece(static_cast<int>(verts.size()), g.attr_kind());
    bool any = false;
    for (const Edge& e : g.edges()) {
      if (local[static_cast<std::size_t>(e.u)] < 0) continue;
      if (find(e.u) != r) continue;
      Edge ne = e;
      ne.u = local[static_cast<std::size_t>(e.u)];
      ne.v = local[static_cast<std::size_t>(e.v)];
      piece.add_signed_edge(ne.id, ne.u, ne.v, ne.sign);
      any = true;
    }
    if (any)
      pieces.push_back(std::move(piece));
    else
      ++isolated;
  }
  return pieces;
}

MultiPoly q_memoized(const Multigraph& g, const QRing& ring, QMemo& memo);

// connected, loop-free, at least one edge
MultiPoly q_component(const Multigraph& g, const QRing& ring, QMemo& memo) {
  const std::string key = ring.tag + ":" + canonical_signed_key(g);
  if (auto hit = memo.find(key)) return *hit;
  const Edge e = g.edges().front();
  const MultiPoly del = q_memoized(g.deleted(e.id), ring, memo);
  const MultiPoly con = q_memoized(g.contracted(e.id), ring, memo);
  const MultiPoly value = (e.sign == Sign::plus)
                              ? ring.B * del + ring.A * con
                              : ring.A * del + ring.B * con;
  memo.store(key, value);
  return value;
}

MultiPoly q_memoized(const Multigraph& g, const QRing& ring, QMemo& memo) {
  Multigraph rest(0, AttrKind::sign);
  MultiPoly acc = strip_loops(g, ring, rest);
  int isolated = 0;
  std::vector<Multigraph> pieces = connected_pieces(rest, isolated);
  // Q is d^(k-1) times the product over nontrivial components.
  const int k = isolated + static_cast<int>(pieces.size());
  for (const Multigraph& piece : pieces) acc *= q_component(piece, ring, memo);
  return d_power(ring, acc, k - 1);
}

}  // namespace

MultiPoly q_poly(const Multigraph& g, const QRing& ring, QMemo* memo) {
  if (g.attr_kind() != AttrKind::sign)
    throw InputError("Q-polynomial requires a signed graph");
  if (memo) return q_memoized(g, ring, *memo);
  return q_literal(g, ring);
}

MultiPoly q_via_state_sum(const Multigraph& g, const QRing& ring, int cap) {
  if (g.attr_kind() != AttrKind::sign)
    throw InputError("Q-polynomial requires a signed graph");
  const int k = g.components();
  MultiPoly total(ring.reg);
  g.for_each_spanning_subgraph(
      [&](const SubgraphReport& report) {
        MultiPoly term = MultiPoly::one(ring.reg);
        for (int i = 0; i < g.edge_count(); ++i) {
          const Edge& e = g.edges()[static_cast<std::size_t>(i)];
          const bool in = report.edges & (std::uint64_t{1} << i);
          const MultiPoly& x = (e.sign == Sign::plus) ? ring.A : ring.B;
          const MultiPoly& y = (e.sign == Sign::plus) ? ring.B : ring.A;
          term *= in ? x : y;
        }
        term *= pow(ring.d, report.components - k);
        term *= pow(ring.d, report.nullity);
        total += term;
      },
      cap);
  return d_power(ring, total, k - 1);
}

MultiPoly kauffman_bracket(const Multigraph& g, const QRing& ring,
                           QMemo* memo) {
  const MultiPoly q = q_poly(g, ring, memo);
  const MultiPoly a = MultiPoly::variable(ring.reg, "A");
  return substitute(q, {{"B", pow(a, -1)}, {"d", -(pow(a, 2) + pow(a, -2))}});
}

JonesValue jones(const MultiPoly& bracket, long writhe) {
  const Registry& reg = bracket.registry();
  const MultiPoly minus_a_cubed =
      MultiPoly::monomial(reg, ExpVec{3}, -1);  // -A^3
  const MultiPoly normalized = bracket * pow(minus_a_cubed, -writhe);
  const auto a_index = reg->find("A");
  JonesValue out;
  for (const auto& [e, c] : normalized.terms()) {
    long a_exp = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (a_index && static_cast<int>(i) == *a_index)
        a_exp = e[i];
      else
        throw InputError("jones: bracket value contains a variable other "
                         "than A");
    }
    out.terms.emplace(-a_exp, c);  // A = t^(-1/4)
  }
  return out;
}

std::string JonesValue::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [qexp, c] : terms) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    const Int mag = boost::multiprecision::abs(c);
    if (qexp == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += 't';
      long num = qexp, den = 4;
      while (num % 2 == 0 && den % 2 == 0) {
        num /= 2;
        den /= 2;
      }
      if (!(num == 1 && den == 1)) {
        out += '^';
        out += std::to_string(num);
        if (den != 1) {
          out += '/';
          out += std::to_string(den);
        }
      }
    }
    first = false;
  }
  return out;
}

}  // namespace linkpoly
