#include "linkpoly/replacement.hpp"

#include <algorithm>

#include "linkpoly/chain_sheaf.hpp"

namespace linkpoly {

namespace {

void check_spec(const Multigraph& g, const ReplacementSpec& spec) {
  if (g.attr_kind() != AttrKind::sign)
    throw InputError("replacement requires a signed graph");
  for (const Edge& e : g.edges())
    if (!spec.count(e.id))
      throw InputError("replacement spec is missing edge \"" + e.id + "\"");
  for (const auto& [id, directive] : spec) {
    if (!g.has_edge(id))
      throw InputError("replacement spec names unknown edge \"" + id + "\"");
    if (directive.n == 0)
      throw InputError("edge \"" + id +
                       "\": replacement integer must be nonzero");
  }
}

std::string piece_id(const std::string& base, int index, int count) {
  int width = 1;
  for (int c = count; c >= 10; c /= 10) ++width;
  std::string digits = std::to_string(index);
  while (static_cast<int>(digits.size()) < width) digits.insert(0, 1, '0');
  return base + "." + digits;
}

MultiPoly d_power(const QRing& ring, MultiPoly value, long n) {
  if (n >= 0) return value * pow(ring.d, n);
  return exact_div(value, pow(ring.d, -n));
}

int signed_length(const Edge& e, int n) { return sign_value(e.sign) * n; }

}  // namespace

ReplacedGraph build_replaced(const Multigraph& g, const ReplacementSpec& spec) {
  check_spec(g, spec);
  Multigraph out(g.vertex_count(), AttrKind::sign);
  std::map<std::string, std::string> provenance;
  int next_vertex = g.vertex_count();

  // First pass fixes the new vertex count (chains need internal vertices).
  int extra = 0;
  for (const Edge& e : g.edges()) {
    const Directive& dir = spec.at(e.id);
    const int count = std::abs(dir.n);
    if (dir.kind == ReplKind::chain) {
      if (e.u == e.v)
        extra += count == 1 ? 0 : count - 1;  // a cycle through new vertices
      else
        extra += count - 1;
    }
  }
  out = Multigraph(g.vertex_count() + extra, AttrKind::sign);

  for (const Edge& e : g.edges()) {
    const Directive& dir = spec.at(e.id);
    const int count = std::abs(dir.n);
    const Sign sign = dir.n > 0 ? e.sign : opposite(e.sign);
    if (dir.kind == ReplKind::sheaf) {
      for (int i = 1; i <= count; ++i) {
        const std::string id = piece_id(e.id, i, count);
        out.add_signed_edge(id, e.u, e.v, sign);
        provenance.emplace(id, e.id);
      }
    } else {
      // path e.u = w0, w1, ..., w_count = e.v through fresh vertices
      std::vector<int> stops;
      stops.push_back(e.u);
      for (int i = 1; i < count; ++i) stops.push_back(next_vertex++);
      stops.push_back(e.v);
      for (int i = 1; i <= count; ++i) {
        const std::string id = piece_id(e.id, i, count);
        out.add_signed_edge(id, stops[static_cast<std::size_t>(i - 1)],
                            stops[static_cast<std::size_t>(i)], sign);
        provenance.emplace(id, e.id);
      }
    }
  }
  return ReplacedGraph{std::move(out), std::move(provenance)};
}

std::pair<MultiPoly, MultiPoly> chain_weights(const QRing& ring, int n) {
  if (n == 0) throw InputError("chain length must be nonzero");
  if (n > 0) {
    MultiPoly x = pow(ring.A, n);
    MultiPoly y = exact_div(pow(ring.X, n) - x, ring.d);
    return {std::move(x), std::move(y)};
  }
  MultiPoly x = pow(ring.B, -n);
  MultiPoly y = exact_div(pow(ring.Y, -n) - x, ring.d);
  return {std::move(x), std::move(y)};
}

std::pair<MultiPoly, MultiPoly> sheaf_weights(const QRing& ring, int n) {
  if (n == 0) throw InputError("sheaf width must be nonzero");
  if (n > 0) {
    MultiPoly y = pow(ring.B, n);
    MultiPoly x = exact_div(pow(ring.Y, n) - y, ring.d);
    return {std::move(x), std::move(y)};
  }
  MultiPoly y = pow(ring.A, -n);
  MultiPoly x = exact_div(pow(ring.X, -n) - y, ring.d);
  return {std::move(x), std::move(y)};
}

std::pair<MultiPoly, MultiPoly> chain_reduce(const QRing& ring, int n,
                                             bool is_loop) {
  auto [x, y] = chain_weights(ring, n);
  if (is_loop) x *= ring.d;
  return {std::move(y), std::move(x)};  // (delete, contract)
}

std::pair<MultiPoly, MultiPoly> sheaf_reduce(const QRing& ring, int n,
                                             bool is_loop) {
  auto [x, y] = sheaf_weights(ring, n);
  if (is_loop) x *= ring.d;
  return {std::move(y), std::move(x)};
}

namespace {

std::pair<MultiPoly, MultiPoly> directive_weights(const QRing& ring,
                                                  const Edge& e,
                                                  const Directive& dir) {
  const int length = signed_length(e, dir.n);
  return dir.kind == ReplKind::chain ? chain_weights(ring, length)
                                     : sheaf_weights(ring, length);
}

}  // namespace

MultiPoly q_hat_via_w(const Multigraph& g, const ReplacementSpec& spec,
                      const QRing& ring) {
  check_spec(g, spec);
  Multigraph colored(g.vertex_count(), AttrKind::color);
  ColorWeights cw;
  for (const Edge& e : g.edges()) {
    colored.add_colored_edge(e.id, e.u, e.v, e.id);  // one color per edge
    cw.xy.emplace(e.id, directive_weights(ring, e, spec.at(e.id)));
  }
  return w_recursive(colored, cw, WParams::all(ring.d));
}

MultiPoly q_hat_via_reduction(const Multigraph& g, const ReplacementSpec& spec,
                           const QRing& ring) {
  check_spec(g, spec);
  if (g.edge_count() == 0)
    return d_power(ring, MultiPoly::one(ring.reg), g.vertex_count() - 1);
  const Edge e = g.edges().front();
  const Directive dir = spec.at(e.id);
  const int length = signed_length(e, dir.n);
  const bool loop = e.u == e.v;
  auto [delete_coeff, contract_coeff] =
      dir.kind == ReplKind::chain ? chain_reduce(ring, length, loop)
                                  : sheaf_reduce(ring, length, loop);
  ReplacementSpec rest = spec;
  rest.erase(e.id);
  return delete_coeff * q_hat_via_reduction(g.deleted(e.id), rest, ring) +
         contract_coeff * q_hat_via_reduction(g.contracted(e.id), rest, ring);
}

namespace {

// internal label variables; never user-visible
std::string internal_label(const std::string& edge_id) {
  return "~" + edge_id;
}

Multigraph with_internal_labels(const Multigraph& g) {
  Multigraph out(g.vertex_count(), AttrKind::label);
  for (const Edge& e : g.edges())
    out.add_labeled_edge(e.id, e.u, e.v, internal_label(e.id));
  return out;
}

}  // namespace

MultiPoly q_gc_via_chain_poly(const Multigraph& g,
                              const std::map<std::string, int>& lengths,
                              const QRing& ring) {
  ReplacementSpec spec;
  for (const auto& [id, n] : lengths) spec[id] = {ReplKind::chain, n};
  check_spec(g, spec);
  const MultiPoly ch = ch_poly(with_internal_labels(g), ring.reg);
  std::map<std::string, MultiPoly> bindings;
  long total_length = 0;
  for (const Edge& e : g.edges()) {
    const int length = signed_length(e, lengths.at(e.id));
    total_length += length;
    MultiPoly value(ring.reg);
    try {
      value = pow(ring.X, length) * pow(ring.A, -length);
    } catch (const InputError&) {
      throw InputError("chain-polynomial route needs positive signed lengths "
                       "outside the bracket ring (edge \"" + e.id + "\")");
    }
    bindings.emplace(internal_label(e.id), std::move(value));
  }
  const MultiPoly one = MultiPoly::one(ring.reg);
  bindings.emplace("w", one - ring.d * ring.d);
  const MultiPoly substituted = substitute(ch, bindings);
  const long exponent = g.edge_count() - g.vertex_count() + 1;
  return d_power(ring, substituted * pow(ring.A, total_length), -exponent);
}

MultiPoly q_gs_via_sheaf_poly(const Multigraph& g,
                              const std::map<std::string, int>& widths,
                              const QRing& ring) {
  ReplacementSpec spec;
  for (const auto& [id, n] : widths) spec[id] = {ReplKind::sheaf, n};
  check_spec(g, spec);
  const MultiPoly sh = sh_poly(with_internal_labels(g), ring.reg);
  std::map<std::string, MultiPoly> bindings;
  long total_width = 0;
  for (const Edge& e : g.edges()) {
    const int width = signed_length(e, widths.at(e.id));
    total_width += width;
    MultiPoly value(ring.reg);
    try {
      value = pow(ring.Y, width) * pow(ring.B, -width);
    } catch (const InputError&) {
      throw InputError("sheaf-polynomial route needs positive signed widths "
                       "outside the bracket ring (edge \"" + e.id + "\")");
    }
    bindings.emplace(internal_label(e.id), std::move(value));
  }
  const MultiPoly one = MultiPoly::one(ring.reg);
  bindings.emplace("w", one - ring.d * ring.d);
  const MultiPoly substituted = substitute(sh, bindings);
  const long exponent = g.vertex_count() - 2 * g.components() + 1;
  return d_power(ring, substituted * pow(ring.B, total_width), -exponent);
}

}  // namespace linkpoly
