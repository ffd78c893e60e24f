#pragma once

#include <map>
#include <string>
#include <vector>

#include "arsobstruct/algebra.hpp"
#include "arsobstruct/catalogue.hpp"
#include "arsobstruct/quiver.hpp"

namespace arsob {

// Valued arrows expanded to parallel copies ("id.k" for valuation > 1), with
// the expanded polarisation acting copy-by-copy.
struct DoubledQuiver {
  Quiver quiver;
  std::map<std::string, std::string> polarisation;  // expanded arrow -> expanded arrow
};

DoubledQuiver double_quiver(const ValuedTranslationQuiver& tq);

// Mesh-algebra presentation on the opposite of the doubled quiver: one
// relation per vertex y with incoming base arrows, summing the reversed
// two-step paths y -> x -> tau(y) through each arrow ending at y.
AlgebraPresentation mesh_presentation(const ValuedTranslationQuiver& tq,
                                      const Field& field = Field::rationals());

// length cap that safely bounds mesh-algebra normal forms on Dynkin shapes
inline int mesh_length_cap(const ValuedTranslationQuiver& tq) {
  return 2 * static_cast<int>(tq.base.quiver.vertices.size()) + 2;
}

struct ReductionStep {
  std::vector<std::vector<std::string>> orbits;  // tau-orbits removed together
  ADEType resulting_type;
};

struct ReductionResult {
  ADEType source;
  ADEType target;
  std::vector<ReductionStep> steps;
  ValuedTranslationQuiver result;  // the reduced quiver (isomorphic to target's entry)
};

// Orbit-removal reductions: D_{2m+1} (m >= 2) -> A_3, E_6 -> A_3,
// E_7 -> D_4, E_8 -> E_7 -> D_4; each step is verified against the
// catalogue target by explicit isomorphism.
ReductionResult reduce_ade(const Catalogue& cat, const ADEType& source);

// Restriction to the connected components containing the named vertices.
ValuedTranslationQuiver drop_components(const ValuedTranslationQuiver& tq,
                                        const std::vector<std::string>& keep_vertices);

}  // namespace arsob
