#pragma once

// Kauffman brackets of rational links m1 m2 ... mk (nonzero integers;
// horizontal when k is odd, vertical when k is even) by transfer matrices:
// a 2x2 matrix per stage, multiplied in O(k), against the exponential
// deletion-contraction route on the associated replaced graph. Also the
// closed forms for (m1,2)-torus links, twist links, and the theta family.
// Everything here lives in the bracket ring (Laurent polynomials in A).

#include <utility>
#include <vector>

#include "linkpoly/multigraph.hpp"
#include "linkpoly/replacement.hpp"
#include "linkpoly/signed_tutte.hpp"

namespace linkpoly {

struct RationalWord {
  std::vector<int> terms;  // m1..mk, all nonzero

  bool horizontal() const { return terms.size() % 2 == 1; }
  void validate() const;
};

// Transfer-matrix evaluation; one-term and two-term words fall through to
// the closed forms below.
MultiPoly bracket_rational(const RationalWord& word, const QRing& ring);

// Bracket of the (m1,2)-torus link: (Y^m1 - B^m1)/d + B^m1 * d.
MultiPoly bracket_torus2(int m1, const QRing& ring);

// Twist link closed form:
//   A^(m1-m2) * {(-A^-4)^m1 + (-A^4)^m2 - 1}
// + A^(m1-m2)/(A^-4+2+A^4) * {(-A^-4)^(m1-m2) - (-A^-4)^m1 - (-A^4)^m2 + 1}
MultiPoly bracket_twist(int m1, int m2, const QRing& ring);

// Theta family: chains m1, m3 and a sheaf m2 in parallel.
MultiPoly bracket_theta(int m1, int m2, int m3, const QRing& ring);

// The associated base graph and replacement spec whose replaced graph's
// bracket equals bracket_rational(word): the oracle path. Horizontal words
// alternate sheaf(m1), chain(m2), sheaf(m3), ...; vertical words chain(m1),
// sheaf(m2), chain(m3), ...
std::pair<Multigraph, ReplacementSpec> build_rational_graph(
    const RationalWord& word);

// Same bracket through deletion-contraction on the replaced graph.
MultiPoly bracket_rational_oracle(const RationalWord& word, const QRing& ring,
                                  QMemo* memo = nullptr);

}  // namespace linkpoly
