#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "arsobstruct/rep.hpp"

namespace arsob {

inline constexpr std::size_t kDefaultTupleBudget = 1000000;

// Is the endomorphism algebra local (no nontrivial idempotent)?  The
// algebra's field must be finite; the scan is exhaustive over End(M).
bool is_indecomposable(const Representation& m);

// Explicit isomorphism search over a finite field (fingerprint-pruned).
bool modules_isomorphic(const Representation& m, const Representation& n);

// All indecomposable modules with dimension vector <= bound (entrywise),
// up to isomorphism, by exhaustive matrix-tuple enumeration over the
// algebra's finite field.  Deterministic output order: modules sorted by
// (total dimension, dimension vector, serialized matrices).
std::vector<Representation> enumerate_indecomposables(
    const AlgebraInstance& a, const std::vector<std::size_t>& bound,
    std::size_t budget = kDefaultTupleBudget);

// Quiver of the stable category of Gorenstein-projective modules within the
// bound: vertices = non-projective GP indecomposables, arrow count (i -> j)
// = dim stable-rad(i,j) / stable-rad^2(i,j).  The syzygy pairing records
// which vertex each first syzygy lands on.
struct StableGpQuiver {
  Quiver quiver;                                  // vertices "M1", "M2", ...
  std::vector<Representation> modules;            // parallel to the vertices
  std::vector<std::pair<int, int>> syzygy_pairs;  // (i, index of syzygy of i)
};

StableGpQuiver stable_gp_quiver(const AlgebraInstance& a, const std::vector<std::size_t>& bound,
                                std::size_t budget = kDefaultTupleBudget,
                                int gorenstein_cap = 8);

// Connected components of the stable GP quiver, treating arrows and syzygy
// pairs as undirected edges; each component lists vertex indices ascending.
std::vector<std::vector<int>> stable_gp_components(const StableGpQuiver& q);

}  // namespace arsob
