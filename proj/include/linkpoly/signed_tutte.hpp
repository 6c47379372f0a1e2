#pragma once

// The Q-polynomial of signed graphs by deletion-contraction and by spanning
// subgraph state sum, the Kauffman bracket specialization, and the Jones
// polynomial.
//
// Recursion rules, with X = A + B*d and Y = A*d + B:
//   Q[E_n] = d^(n-1)
//   loop:     Q[G] = X*Q[G-e] for a - loop, Y*Q[G-e] for a + loop
//   non-loop: Q[G] = A*Q[G-e] + B*Q[G/e] for a - edge,
//             Q[G] = B*Q[G-e] + A*Q[G/e] for a + edge

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "linkpoly/multigraph.hpp"
#include "linkpoly/polyring.hpp"

namespace linkpoly {

// The constants a Q evaluation runs over. `symbolic` works in Z[A,B,d];
// `bracket` fixes B = A^-1 and d = -A^2 - A^-2, giving Laurent polynomials
// in A alone (there X = -A^-3 and Y = -A^3, and all four are units).
struct QRing {
  Registry reg;
  MultiPoly A, B, d, X, Y;
  std::string tag;  // distinguishes memo keys across rings

  static QRing symbolic(const Registry& reg);
  static QRing bracket(const Registry& reg);
};

// Concurrency-safe idempotent cache from canonical graph keys to values.
class QMemo {
public:
  std::optional<MultiPoly> find(const std::string& key) const;
  void store(const std::string& key, const MultiPoly& value);
  std::size_t size() const;

private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, MultiPoly> map_;
};

// Deletion-contraction. Without a memo this is the literal recursion above
// (loops stripped first, then the smallest-id edge). With a memo, loop-free
// graphs are additionally split into connected components and cached under
// canonical keys; the value is identical either way.
MultiPoly q_poly(const Multigraph& g, const QRing& ring, QMemo* memo = nullptr);

// Spanning-subgraph state sum
//   d^(k-1) * sum_S {prod_{e in S} x_s(e)} {prod_{e notin S} y_s(e)}
//            * d^(k<S>-k) * d^(n<S>)
// with x_+ = A, y_+ = B and x_- = B, y_- = A (calibrated so that the single
// edge and single loop reproduce the recursion for both signs).
MultiPoly q_via_state_sum(const Multigraph& g, const QRing& ring,
                          int cap = kDefaultEnumerationCap);

// Q with B -> A^-1, d -> -A^2 - A^-2 substituted; `ring` must be symbolic.
MultiPoly kauffman_bracket(const Multigraph& g, const QRing& ring,
                           QMemo* memo = nullptr);

// Laurent polynomial in t with quarter-integer exponents, stored as integer
// multiples of 1/4 and printed as reduced fractions.
struct JonesValue {
  std::map<long, Int, std::greater<long>> terms;  // 4*exponent -> coefficient

  bool operator==(const JonesValue& o) const { return terms == o.terms; }
  std::string to_string() const;
};

// V_L(t) = (-A^3)^(-w) * bracket, then A = t^(-1/4). The writhe is caller
// input; nothing here knows how to compute it from a diagram.
JonesValue jones(const MultiPoly& bracket, long writhe);

}  // namespace linkpoly
