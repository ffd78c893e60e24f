#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "arsobstruct/catalogue.hpp"
#include "arsobstruct/geometry.hpp"

namespace arsob {

using Json = nlohmann::ordered_json;

// Input to the decision procedure: an ADE hypersurface singularity of odd
// ambient dimension, a branch system (threefold g + z2^2 + z3^2 implied), or
// an exceptional-curve configuration of a small resolution (threefold implied).
struct AdeInput {
  ADEType type;
  int dim = 3;
};

struct SingularityDescriptor {
  std::variant<AdeInput, BranchSystem, CurveConfiguration> value;
};

enum class Outcome { NodalUnobstructed, Obstructed, OutOfScope, Undetermined };

const char* outcome_name(Outcome o);

// One link of the certificate chain; payload shape depends on kind.
// Kinds: KnoerrerNormalize, CatalogueLoop, AuslanderSolbergReduction,
// FrakSContrapositive, BranchRecognition, CurveTwoCycle, CurveLoop.
struct CertificateStep {
  std::string kind;
  Json payload;
  std::string cite;
};

struct Verdict {
  Json input;
  Json normalized;
  Outcome outcome = Outcome::Undetermined;
  std::vector<CertificateStep> certificate;
  std::vector<std::string> citations;  // step anchors first, then outcome anchors
};

// The decision procedure: maps a descriptor to an outcome with a
// citation-bearing certificate. Pure; identical inputs give identical
// verdicts including step order. Input-validation failures throw.
Verdict decide(const Catalogue& cat, const SingularityDescriptor& s);

// Fixed-field-order JSON rendering of a verdict.
Json verdict_json(const Verdict& v);

// Deterministic human-readable rendering; every step appears with its anchor.
std::string explain(const Verdict& v);

}  // namespace arsob
