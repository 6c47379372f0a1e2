#pragma once

// Canonical-form keys for signed multigraphs, used by the optional
// memoization of the deletion-contraction recursions. Isomorphic graphs map
// to the same key; the key encodes the full adjacency structure, so equal
// keys imply isomorphic graphs.

#include <string>

#include "linkpoly/multigraph.hpp"

namespace linkpoly {

// Iso-invariant key ("C|..."): color refinement followed by a pruned search
// for the lexicographically minimal adjacency encoding. If the search would
// exceed `work_cap` nodes (pathologically symmetric inputs), falls back to a
// deterministic labeled encoding ("X|...") which is still a sound memo key,
// just not shared across isomorphic copies. The two families never collide.
std::string canonical_signed_key(const Multigraph& g, long work_cap = 100000);

}  // namespace linkpoly
