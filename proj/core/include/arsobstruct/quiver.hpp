#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arsobstruct/errors.hpp"

namespace arsob {

struct Arrow {
  std::string id;
  std::string src;
  std::string dst;
};

// Finite quiver: ordered vertex list (order fixes all deterministic output),
// arrow multiset with unique ids.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  bool has_vertex(const std::string& v) const;
  void validate() const;  // invariants: endpoints exist, ids unique

  // Arrows x->y (ids, in declaration order).
  std::vector<std::string> arrows_between(const std::string& x, const std::string& y) const;
  std::set<std::string> successors(const std::string& x) const;    // x^+
  std::set<std::string> predecessors(const std::string& x) const;  // x^-
};

// Valued quiver: no double arrows; valuation per arrow id (>= 1).
struct ValuedQuiver {
  Quiver quiver;
  std::map<std::string, int> valuation;

  void validate() const;
  int valuation_of(const std::string& arrow_id) const;
};

// Valued stable translation quiver with derived polarisation
// sigma: Q_1(x,y) -> Q_1(tau y, x).
struct ValuedTranslationQuiver {
  ValuedQuiver base;
  std::map<std::string, std::string> tau;           // vertex -> vertex
  std::map<std::string, std::string> polarisation;  // arrow id -> arrow id

  const std::string& tau_of(const std::string& v) const;
  std::vector<std::vector<std::string>> tau_orbits() const;  // canonical order
};

// Validates the translation axiom (tau x)^+ = x^-, computes the polarisation,
// and checks a(sigma alpha) = a(alpha).
ValuedTranslationQuiver build_translation_quiver(const ValuedQuiver& vq,
                                                 const std::map<std::string, std::string>& tau);

std::set<std::string> detect_loops(const Quiver& q);

std::set<std::pair<std::string, std::string>> detect_two_cycles(const Quiver& q);

// Induced sub-translation-quiver after deleting the given tau-closed vertex
// orbits; re-validates the axioms on the result.
ValuedTranslationQuiver remove_tau_orbits(const ValuedTranslationQuiver& tq,
                                          const std::vector<std::vector<std::string>>& orbits);

// Partition of the vertex set by undirected reachability; components ordered
// by first vertex occurrence, vertices in declaration order.
std::vector<std::vector<std::string>> connected_components(const Quiver& q);

inline constexpr std::size_t kIsoVertexCap = 128;

// Bijection preserving arrows, valuations and tau, or nullopt.
std::optional<std::map<std::string, std::string>> quiver_isomorphic(
    const ValuedTranslationQuiver& a, const ValuedTranslationQuiver& b,
    std::size_t vertex_cap = kIsoVertexCap);

std::string export_dot(const Quiver& q);
std::string export_dot(const ValuedTranslationQuiver& tq);

// Translation-quiver text format (see README):
//   vertex <label>
//   arrow <id> <src> <dst> [<valuation>]
//   tau <x> <y>
ValuedTranslationQuiver parse_translation_quiver(const std::string& text);
std::string serialize_translation_quiver(const ValuedTranslationQuiver& tq);

}  // namespace arsob
