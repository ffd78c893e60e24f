#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arsobstruct/field.hpp"
#include "arsobstruct/quiver.hpp"

namespace arsob {

// Bivariate polynomial over the rationals in z0, z1.
// coeffs[j][i] is the coefficient of z0^i * z1^j; rows trimmed of trailing
// zeros, top rows trimmed when entirely zero.
struct BiPoly {
  std::vector<std::vector<Rational>> coeffs;

  bool is_zero() const;
  int degree_z1() const;  // -1 for the zero polynomial
  Rational coeff(int i, int j) const;
  void set_coeff(int i, int j, const Rational& value);
  void normalize();
};

BiPoly bipoly_add(const BiPoly& a, const BiPoly& b);
BiPoly bipoly_sub(const BiPoly& a, const BiPoly& b);
BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b);
BiPoly bipoly_scale(const BiPoly& a, const Rational& c);

// Exact gcd in Q[z0, z1] via content/primitive-part Euclid, normalized so the
// leading coefficient (highest z1-degree, then highest z0-degree) is 1.
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);

// Text format: terms joined by +/-, each a '*'-product of an optional rational
// coefficient (e.g. 3, -1/2) and variable powers z0^k, z1^k. Whitespace free.
BiPoly parse_bipoly(const std::string& text);
std::string serialize_bipoly(const BiPoly& p);

// --- branch systems (cA_n inputs) ---

struct BranchSystem {
  std::vector<BiPoly> factors;  // f_1, ..., f_n; g = f_1 * ... * f_n

  // Each factor vanishes at the origin and has a nonzero linear part.
  void validate() const;
};

// One polynomial per line; blank lines and '#' comments ignored.
BranchSystem parse_branch_system(const std::string& text);

struct CAnReport {
  std::size_t n = 0;
  bool pairwise_coprime = false;
  bool transverse_node = false;
  bool small_resolution = false;
};

// Checks the branch-system invariants and pairwise germ coprimality (the gcd
// of two factors must not vanish at the origin), then reports whether the
// configuration is the transverse node (n = 2 with independent linear parts).
CAnReport recognize_cAn(const BranchSystem& b);

// --- exceptional-curve configurations (small resolutions) ---

enum class NormalBundle { MinusOneMinusOne, Other, Unknown };

struct CurveConfiguration {
  struct Curve {
    std::string name;
    NormalBundle bundle = NormalBundle::Unknown;
  };
  std::vector<Curve> curves;
  std::vector<std::pair<std::string, std::string>> edges;  // undirected, simple

  void validate() const;
  const Curve* find(const std::string& name) const;
};

// Lines: `curve <name> [nb=(-1,-1)|other|unknown]` and `meet <a> <b>`.
CurveConfiguration parse_curve_config(const std::string& text);

// Skeleton of the contraction algebra's quiver: one vertex per curve, a
// mandated 2-cycle per intersection, a mandated loop per curve whose normal
// bundle is not O(-1)+O(-1). `mandate` maps arrow id -> "two_cycle" | "loop".
struct CtSkeleton {
  Quiver quiver;
  std::map<std::string, std::string> mandate;
};

CtSkeleton ct_quiver_skeleton(const CurveConfiguration& c);

enum class CurveOutcome { Nodal, Obstructed, Undetermined };

struct CurveClassification {
  CurveOutcome outcome = CurveOutcome::Undetermined;
  // For Obstructed: the witness in the quiver skeleton.
  std::string witness_kind;  // "loop" or "two_cycle"
  std::vector<std::string> witness_vertices;
};

CurveClassification classify_curve_config(const CurveConfiguration& c);

}  // namespace arsob
