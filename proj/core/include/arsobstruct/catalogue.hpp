#pragma once

#include <string>
#include <vector>

#include "arsobstruct/quiver.hpp"

namespace arsob {

enum class ADEFamily { A, D, E };

// Simple hypersurface singularity type: A_n (n >= 1), D_n (n >= 4),
// E_n (n in {6,7,8}).
struct ADEType {
  ADEFamily family = ADEFamily::A;
  int index = 1;

  std::string name() const;  // "A3", "D4", ...
  bool operator==(const ADEType& o) const { return family == o.family && index == o.index; }
};

// Parse "A3" / "D4" / "E6" (also accepts "A_3" style); range-checks.
ADEType parse_ade(const std::string& text);

// Knoerrer periodicity: every odd ambient dimension shares the singularity
// category of the curve case d = 1.  Even dimensions are out of scope.
struct ADEDescriptor {
  ADEType type;
  int dim = 1;
};

ADEDescriptor knoerrer_normalize(const ADEType& type, int dim);

// shipped range
inline constexpr int kMaxAIndex = 40;
inline constexpr int kMaxDIndex = 41;

struct CatalogueEntry {
  ADEType type;
  ValuedTranslationQuiver ar_quiver;  // stable AR-quiver of the singularity category, d = 1
  bool has_loop = false;
  int indecomposable_count = 0;
  bool in_frakS = false;  // small-resolution region membership (metadata with citation)
  std::vector<std::string> citations;
};

// Construct the structural description of one entry (used by the catalogue
// generator; shipped data is the serialized form of these).
CatalogueEntry build_entry(const ADEType& type);

// all shipped types, in catalogue order (A1..A40, D4..D41, E6..E8)
std::vector<ADEType> shipped_types();

class Catalogue {
public:
  // --catalogue flag beats ARSOBSTRUCT_CATALOGUE beats the bundled path
  static std::string default_path();
  static Catalogue load(const std::string& dir);

  const CatalogueEntry& get(const ADEType& type) const;  // OutOfCatalogue
  std::vector<ADEType> types() const;

private:
  std::vector<CatalogueEntry> entries_;
};

// serialized metadata sidecar for one entry (JSON, fixed key order)
std::string serialize_entry_metadata(const CatalogueEntry& e);

struct ValidationIssue {
  std::string entry;
  std::string check;
  std::string message;
};

struct ValidationReport {
  std::vector<std::string> passed;  // entry names
  std::vector<ValidationIssue> failures;
  bool ok() const { return failures.empty(); }
};

// Release gate: axioms, valuations, loop/2-cycle expectations, connectivity,
// and the named orbit-removal reductions, on every loaded entry.
ValidationReport validate_catalogue(const Catalogue& c);

}  // namespace arsob
