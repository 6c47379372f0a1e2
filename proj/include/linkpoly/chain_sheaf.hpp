#pragma once

// Chain and sheaf polynomials of edge-labeled graphs, plus the flow and
// tension polynomials realizing their definitional sums
//   Ch[G] = sum_Y F[G-Y](1-w) * eps(Y)
//   Sh[G] = sum_Y T[G/Y](1-w) * eps(Y)
// where Y ranges over edge subsets and eps(Y) is the product of the labels
// of Y. Edge labels are variables registered on demand; w is global.

#include "linkpoly/multigraph.hpp"
#include "linkpoly/polyring.hpp"

namespace linkpoly {

// Ch[E_n] = 1; loop a: (a-w)Ch[G-a]; otherwise (a-1)Ch[G-a] + Ch[G/a].
MultiPoly ch_poly(const Multigraph& g, const Registry& reg);

// Sh[E_n] = 1; bridge a: (a-w)Sh[G/a]; otherwise (a-1)Sh[G/a] + Sh[G-a].
// (Contracting a loop deletes it, so a loop a contributes a factor a.)
MultiPoly sh_poly(const Multigraph& g, const Registry& reg);

// Polynomial in q counting nowhere-zero Z_q flows at positive integers q.
MultiPoly flow_poly(const Multigraph& g, const Registry& reg);

// Polynomial in q counting nowhere-zero q-tensions: the chromatic polynomial
// divided by q^k(G).
MultiPoly tension_poly(const Multigraph& g, const Registry& reg);

MultiPoly ch_from_definition(const Multigraph& g, const Registry& reg,
                             int cap = kDefaultEnumerationCap);
MultiPoly sh_from_definition(const Multigraph& g, const Registry& reg,
                             int cap = kDefaultEnumerationCap);

// Brute-force counts backing the two polynomials; these never touch the
// deletion-contraction path.
long count_nowhere_zero_flows(const Multigraph& g, int q);
long count_nowhere_zero_tensions(const Multigraph& g, int q);

}  // namespace linkpoly
