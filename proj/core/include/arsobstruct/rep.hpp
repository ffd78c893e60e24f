#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arsobstruct/algebra.hpp"
#include "arsobstruct/matrix.hpp"

namespace arsob {

// Module over an AlgebraInstance as a quiver representation: one space per
// vertex, one matrix per arrow (arrow a: u -> w gives dims[w] x dims[u]).
struct Representation {
  const AlgebraInstance* algebra = nullptr;
  std::vector<std::size_t> dims;    // per vertex index
  std::vector<Matrix> arrow_maps;   // per arrow index

  std::size_t total_dim() const;
  void validate() const;  // shapes + relations evaluate to zero

  // matrix of a composable arrow-index word (diagrammatic order)
  Matrix eval_word(const std::vector<int>& word) const;
};

Representation direct_sum(const Representation& a, const Representation& b);

// Module map f: M -> N as per-vertex blocks (N_v x M_v matrices).
struct RepMap {
  std::vector<Matrix> blocks;
};

RepMap compose_maps(const RepMap& outer, const RepMap& inner, const Field& f);

// all block entries in one vector (vertex-major, row-major), for span tests
Vec flatten_map(const RepMap& f);

enum class StandardKind { simple, projective, injective };

Representation standard_module(const AlgebraInstance& a, StandardKind kind,
                               const std::string& vertex);

// the regular module Lambda = sum of all indecomposable projectives
Representation regular_module(const AlgebraInstance& a);

struct HomBasis {
  std::size_t dim = 0;
  std::vector<RepMap> maps;  // deterministic basis
};

HomBasis hom_space(const Representation& m, const Representation& n);

// dim of Hom(M,N) modulo maps factoring through a projective
std::size_t stable_hom_dim(const Representation& m, const Representation& n);

// Projective module sum_k e_{gens[k]} Lambda with explicit path basis.
struct ProjModule {
  std::vector<int> gens;  // generator vertex indices
  Representation rep;
  // per vertex: ordered list of (generator slot k, algebra basis index)
  std::vector<std::vector<std::pair<int, std::size_t>>> basis_at;

  std::size_t total_dim() const { return rep.total_dim(); }
};

ProjModule make_projective(const AlgebraInstance& a, const std::vector<int>& gens);

// module map P -> M determined by generator images (images[k] = vector in
// M at vertex gens[k])
RepMap proj_map_from_generators(const ProjModule& p, const Representation& m,
                                const std::vector<Vec>& images);

// minimal projective cover P -> M (generators lift a basis of top M)
struct ProjCover {
  ProjModule p;
  RepMap map;
};

ProjCover projective_cover(const Representation& m);

// kernel of the projective cover map, as a representation
Representation syzygy(const Representation& m);

// Minimal projective resolution P_n -> ... -> P_0 -> M (computed degrees
// 0..length; complete = true when the syzygy vanished at 'length').
struct Resolution {
  std::vector<ProjModule> projectives;
  std::vector<RepMap> differentials;  // differentials[k]: P_{k+1} -> P_k
  RepMap augmentation;                // P_0 -> M
  std::vector<std::size_t> target_dims;  // dims of M, for the exactness check
  bool complete = false;

  bool is_exact() const;    // rank certification at all computed degrees
  bool is_minimal() const;  // all differential entries in rad
};

Resolution minimal_projective_resolution(const Representation& m, int degree);

std::size_t ext_dim(const Representation& m, const Representation& n, int k);

enum class HomSide { projective, injective };

struct HomDim {
  int value = 0;       // meaningful when !at_least
  bool at_least = false;  // true: >= cap (not terminated within cap)
};

HomDim homological_dimension(const Representation& m, HomSide side, int cap);

struct GorensteinReport {
  bool gorenstein = false;
  HomDim left_injective_dim;   // injdim of the left regular module
  HomDim right_injective_dim;  // injdim of the right regular module
};

GorensteinReport is_gorenstein(const AlgebraInstance& a, int cap);

struct GpCertificate {
  bool gorenstein_projective = false;
  std::vector<int> checked_degrees;
  int failed_degree = -1;  // first degree with Ext^i(M, Lambda) != 0, if any
};

GpCertificate is_gorenstein_projective(const AlgebraInstance& a, const Representation& m,
                                       int cap);

// dual of a representation over the opposite algebra (which must be
// instantiate(opposite_presentation(...)) of m's algebra, same arrow order)
Representation dual_representation(const Representation& m, const AlgebraInstance& op);

// Representation file format:
//   dims <vertex>=<d> ...
//   matrix <arrow>
//   <d_dst rows of d_src entries>
Representation parse_representation(const AlgebraInstance& a, const std::string& text);
std::string serialize_representation(const Representation& m);

}  // namespace arsob
