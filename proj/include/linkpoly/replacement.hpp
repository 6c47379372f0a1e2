#pragma once

// The chain/sheaf replacement calculus. A directive Chain(n) replaces an
// edge by a path, Sheaf(n) by a bundle of parallel edges; |n| edges carry
// the original sign when n > 0 and the opposite sign when n < 0 (mirror
// convention), so the signed length/width of the replacement is always
// sign(e)*n. Q of the replaced graph can be computed three ways: direct
// recursion on the built graph, as a W-polynomial of the original graph at
// t = z1 = z2 = d with per-edge weights
//   chain of signed length L > 0:  x = A^L,            y = (X^L - A^L)/d
//   chain of signed length L < 0:  x = B^|L|,          y = (Y^|L| - B^|L|)/d
//   sheaf of signed width  L > 0:  x = (Y^L - B^L)/d,  y = B^L
//   sheaf of signed width  L < 0:  x = (X^|L| - A^|L|)/d,  y = A^|L|
// (in the bracket ring the two halves coincide, since B = A^-1, Y = X^-1),
// or through the chain/sheaf polynomial closed forms for homogeneous specs.

#include <map>
#include <string>
#include <utility>

#include "linkpoly/colored_tutte.hpp"
#include "linkpoly/multigraph.hpp"
#include "linkpoly/signed_tutte.hpp"

namespace linkpoly {

enum class ReplKind { chain, sheaf };

struct Directive {
  ReplKind kind = ReplKind::chain;
  int n = 1;  // nonzero
};

using ReplacementSpec = std::map<std::string, Directive>;

struct ReplacedGraph {
  Multigraph graph;
  std::map<std::string, std::string> provenance;  // new edge -> original edge
};

// The spec must give exactly one directive per edge of g. A chain on a loop
// closes into a cycle; a sheaf on a loop becomes |n| loops.
ReplacedGraph build_replaced(const Multigraph& g, const ReplacementSpec& spec);

// (x, y) weights for a chain / sheaf of signed length `n`. Negative n in the
// symbolic ring is served by the mirrored form above, so all nonzero n work
// in both rings.
std::pair<MultiPoly, MultiPoly> chain_weights(const QRing& ring, int n);
std::pair<MultiPoly, MultiPoly> sheaf_weights(const QRing& ring, int n);

// One replacement step as a pair of coefficients (on Q of the deleted part,
// on Q of the contracted part); the contract coefficient carries an extra d
// when the edge is a loop.
std::pair<MultiPoly, MultiPoly> chain_reduce(const QRing& ring, int n,
                                             bool is_loop);
std::pair<MultiPoly, MultiPoly> sheaf_reduce(const QRing& ring, int n,
                                             bool is_loop);

// Q of the replaced graph as W(G)(d,d,d) with the weights above.
MultiPoly q_hat_via_w(const Multigraph& g, const ReplacementSpec& spec,
                      const QRing& ring);

// Q of the replaced graph by recursing on g itself, one reduce step per
// edge. A third route, useful as a cross-check.
MultiPoly q_hat_via_reduction(const Multigraph& g, const ReplacementSpec& spec,
                           const QRing& ring);

// All-chain closed form: substitute w -> 1-d^2 and each edge label by
// (X/A)^L into Ch[G], then multiply by A^(sum L) / d^(q-p+1). Lengths are
// directives (n), converted to signed lengths internally; negative signed
// lengths require the bracket ring.
MultiPoly q_gc_via_chain_poly(const Multigraph& g,
                              const std::map<std::string, int>& lengths,
                              const QRing& ring);

// All-sheaf dual: a -> (Y/B)^L, w -> 1-d^2 in Sh[G], times
// B^(sum L) / d^(p-2k+1).
MultiPoly q_gs_via_sheaf_poly(const Multigraph& g,
                              const std::map<std::string, int>& widths,
                              const QRing& ring);

}  // namespace linkpoly
