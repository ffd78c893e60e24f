#pragma once

#include <map>
#include <string>
#include <vector>

#include "arsobstruct/field.hpp"
#include "arsobstruct/matrix.hpp"
#include "arsobstruct/quiver.hpp"

namespace arsob {

// One term of a relation: coefficient times a composable path written in
// diagrammatic order (p*q = traverse p, then q).
struct PathTerm {
  Rational coeff;
  std::vector<std::string> arrows;  // arrow ids, length >= 2 for relations
};

struct Relation {
  std::vector<PathTerm> terms;  // common source/target across terms
  std::string src, dst;
};

struct AlgebraPresentation {
  Quiver quiver;
  Field field = Field::rationals();
  std::vector<Relation> relations;
};

// A basis path in normal form; empty arrow sequence = trivial path e_{vertex}.
struct BasisPath {
  std::vector<int> arrows;  // arrow indices into the presentation quiver
  int src = 0, dst = 0;     // vertex indices
  std::size_t length() const { return arrows.size(); }
};

// Instantiated algebra: finite-dimensional quotient with a normal-form basis
// (paths ordered length-then-lexicographically) and exact multiplication.
// Immutable after construction.
class AlgebraInstance {
public:
  const AlgebraPresentation& presentation() const { return pres_; }
  const Field& field() const { return field_; }
  std::size_t dimension() const { return basis_.size(); }
  int nilpotency() const { return nilpotency_; }  // least N with rad^N = 0

  const std::vector<BasisPath>& basis() const { return basis_; }
  const BasisPath& basis_path(std::size_t i) const { return basis_[i]; }

  std::size_t vertex_count() const { return vertex_names_.size(); }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  int vertex_index(const std::string& name) const;
  std::size_t arrow_count() const { return arrow_src_.size(); }
  int arrow_src(int a) const { return arrow_src_[a]; }
  int arrow_dst(int a) const { return arrow_dst_[a]; }
  const std::string& arrow_name(int a) const { return arrow_names_[a]; }
  int arrow_index(const std::string& name) const;

  // index of the trivial path e_v in the basis
  std::size_t idempotent_index(int v) const { return e_index_[v]; }

  // Elements are coordinate vectors over the basis.
  Vec zero_element() const { return Vec(basis_.size(), Rational(0)); }
  Vec basis_element(std::size_t i) const;
  Vec multiply(const Vec& u, const Vec& v) const;
  // product of two basis paths as an element
  Vec multiply_basis(std::size_t i, std::size_t j) const;

  std::string element_to_string(const Vec& u) const;

  friend AlgebraInstance instantiate(const AlgebraPresentation& p, int length_cap);

private:
  AlgebraPresentation pres_;
  Field field_ = Field::rationals();
  std::vector<std::string> vertex_names_;
  std::vector<std::string> arrow_names_;
  std::vector<int> arrow_src_, arrow_dst_;
  std::vector<BasisPath> basis_;
  std::vector<std::size_t> e_index_;
  int nilpotency_ = 1;

  // reduced rewriting system (noncommutative Groebner basis up to the cap):
  // each entry maps a leading word to the rest of the polynomial (negated and
  // scaled so that lead = sum of smaller normal terms)
  struct Rewrite {
    std::vector<int> lead;
    std::map<std::vector<int>, Rational> rest;
  };
  std::vector<Rewrite> rewrites_;
  std::map<std::vector<int>, std::size_t> basis_lookup_;  // word -> basis index

  // reduce an arbitrary word to normal form as an element
  Vec reduce_word(const std::vector<int>& word) const;
  friend class AlgebraBuilder;
};

AlgebraPresentation parse_presentation(const std::string& text);

inline constexpr int kDefaultLengthCap = 32;

AlgebraInstance instantiate(const AlgebraPresentation& p, int length_cap = kDefaultLengthCap);

// [dim rad^0, dim rad^1, ..., 0], computed by honest subspace multiplication.
std::vector<std::size_t> radical_power_dims(const AlgebraInstance& a);

// Gabriel quiver recovery: arrow (i,j) valuation = dim e_i rad e_j / e_i rad^2 e_j
// on the sector of paths from i to j.
ValuedQuiver quiver_of_algebra(const AlgebraInstance& a);

// Reverse all arrows and all relation paths.
AlgebraPresentation opposite_presentation(const AlgebraPresentation& p);

std::string serialize_presentation(const AlgebraPresentation& p);

}  // namespace arsob
