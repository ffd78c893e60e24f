#include "arsobstruct/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "arsobstruct/errors.hpp"

namespace arsob {

namespace {

void require_finite_field(const Field& f, const char* what) {
  if (f.is_rationals())
    fail(ErrorKind::InvalidInput, std::string(what) + " requires a finite coefficient field");
}

Matrix scale_add(const Matrix& acc, const Matrix& m, const Rational& c, const Field& f) {
  Matrix out = acc;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t cc = 0; cc < m.cols(); ++cc)
      out.at(r, cc) = f.add(out.at(r, cc), f.mul(c, m.at(r, cc)));
  return out;
}

// f = sum coeffs[i] * basis[i], blockwise
RepMap combine(const std::vector<RepMap>& basis, const std::vector<Rational>& coeffs,
               const Field& f) {
  RepMap out;
  out.blocks = basis[0].blocks;
  for (Matrix& b : out.blocks)
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) b.at(r, c) = f.zero();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t v = 0; v < out.blocks.size(); ++v)
      out.blocks[v] = scale_add(out.blocks[v], basis[i].blocks[v], coeffs[i], f);
  }
  return out;
}

bool blocks_invertible(const RepMap& f, const Field& field) {
  for (const Matrix& b : f.blocks) {
    if (b.rows() != b.cols()) return false;
    if (rank(b, field) != b.rows()) return false;
  }
  return true;
}

bool blocks_zero(const RepMap& f) {
  for (const Matrix& b : f.blocks)
    if (!b.is_zero()) return false;
  return true;
}

bool blocks_identity(const RepMap& f) {
  for (const Matrix& b : f.blocks)
    if (!(b == Matrix::identity(b.rows()))) return false;
  return true;
}

RepMap square(const RepMap& f, const Field& field) { return compose_maps(f, f, field); }

// f^e by repeated squaring, blockwise
RepMap power(RepMap f, std::size_t e, const Field& field) {
  RepMap acc;
  acc.blocks.clear();
  for (const Matrix& b : f.blocks) acc.blocks.push_back(Matrix::identity(b.rows()));
  while (e > 0) {
    if (e & 1) acc = compose_maps(acc, f, field);
    f = square(f, field);
    e >>= 1;
  }
  return acc;
}

// odometer over F_p^n; returns false when wrapped around to zero
bool next_tuple(std::vector<std::uint32_t>& digits, std::uint32_t p) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

struct RelationWord {
  Rational coeff;
  std::vector<int> arrows;
};

struct CompiledRelation {
  int src, dst;
  std::vector<RelationWord> terms;
};

std::vector<CompiledRelation> compile_relations(const AlgebraInstance& a) {
  std::vector<CompiledRelation> out;
  for (const Relation& rel : a.presentation().relations) {
    CompiledRelation c;
    c.src = a.vertex_index(rel.src);
    c.dst = a.vertex_index(rel.dst);
    for (const PathTerm& t : rel.terms) {
      RelationWord w;
      w.coeff = a.field().make(t.coeff);
      for (const std::string& name : t.arrows) w.arrows.push_back(a.arrow_index(name));
      c.terms.push_back(std::move(w));
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool satisfies_relations(const Representation& m, const std::vector<CompiledRelation>& rels) {
  const Field& f = m.algebra->field();
  for (const CompiledRelation& rel : rels) {
    if (m.dims[rel.src] == 0 || m.dims[rel.dst] == 0) continue;
    Matrix sum(m.dims[rel.dst], m.dims[rel.src]);
    for (const RelationWord& t : rel.terms)
      sum = scale_add(sum, m.eval_word(t.arrows), t.coeff, f);
    if (!sum.is_zero()) return false;
  }
  return true;
}

// cheap isomorphism invariants: arrow ranks, radical and socle dimensions
std::vector<std::size_t> fingerprint(const Representation& m) {
  const AlgebraInstance& a = *m.algebra;
  const Field& f = a.field();
  std::vector<std::size_t> out;
  for (const Matrix& b : m.arrow_maps) out.push_back(rank(b, f));
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    // radical dimension at v: rank of all incoming arrow columns together
    std::vector<Vec> incoming;
    std::size_t outgoing_rows = 0;
    for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
      if (a.arrow_dst(static_cast<int>(ar)) == static_cast<int>(v)) {
        const Matrix& b = m.arrow_maps[ar];
        for (std::size_t c = 0; c < b.cols(); ++c) {
          Vec col(b.rows());
          for (std::size_t r = 0; r < b.rows(); ++r) col[r] = b.at(r, c);
          incoming.push_back(std::move(col));
        }
      }
      if (a.arrow_src(static_cast<int>(ar)) == static_cast<int>(v))
        outgoing_rows += m.arrow_maps[ar].rows();
    }
    out.push_back(span_dim(incoming, m.dims[v], f));
    // socle dimension at v: kernel of all outgoing arrows together
    Matrix stacked(outgoing_rows, m.dims[v]);
    std::size_t row = 0;
    for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
      if (a.arrow_src(static_cast<int>(ar)) != static_cast<int>(v)) continue;
      const Matrix& b = m.arrow_maps[ar];
      for (std::size_t r = 0; r < b.rows(); ++r, ++row)
        for (std::size_t c = 0; c < b.cols(); ++c) stacked.at(row, c) = b.at(r, c);
    }
    out.push_back(m.dims[v] - rank(stacked, f));
  }
  return out;
}

std::string sort_key(const Representation& m) {
  std::string key;
  key += std::to_string(m.total_dim());
  key += '|';
  for (std::size_t d : m.dims) {
    key += std::to_string(d);
    key += ',';
  }
  key += '|';
  key += serialize_representation(m);
  return key;
}

// basis of the subspace of maps M -> N that factor through a projective,
// as flattened vectors (within Hom(M, N))
std::vector<Vec> projective_part(const Representation& m, const Representation& n,
                                 const ProjCover& cover_n) {
  const Field& f = m.algebra->field();
  HomBasis lifts = hom_space(m, cover_n.p.rep);
  std::vector<Vec> out;
  for (const RepMap& g : lifts.maps)
    out.push_back(flatten_map(compose_maps(cover_n.map, g, f)));
  return out;
}

std::size_t hom_coords(const Representation& m, const Representation& n) {
  std::size_t total = 0;
  for (std::size_t v = 0; v < m.dims.size(); ++v) total += n.dims[v] * m.dims[v];
  return total;
}

}  // namespace

bool is_indecomposable(const Representation& m) {
  require_finite_field(m.algebra->field(), "indecomposability scan");
  if (m.total_dim() == 0) return false;
  if (m.total_dim() == 1) return true;
  const Field& f = m.algebra->field();
  HomBasis end = hom_space(m, m);
  if (end.dim == 1) return true;
  // Fitting prefilter: a basis element whose stable power is neither zero
  // nor invertible splits the module
  std::size_t n = m.total_dim();
  for (const RepMap& g : end.maps) {
    RepMap p = power(g, n, f);
    if (!blocks_zero(p) && !blocks_invertible(p, f)) return false;
  }
  if (end.dim > 20)
    fail(ErrorKind::BudgetExceeded, "endomorphism algebra too large for the idempotent scan");
  std::uint32_t p = f.characteristic();
  std::vector<std::uint32_t> digits(end.dim, 0);
  std::vector<Rational> coeffs(end.dim, f.zero());
  while (next_tuple(digits, p)) {
    for (std::size_t i = 0; i < end.dim; ++i) coeffs[i] = Rational(digits[i]);
    RepMap g = combine(end.maps, coeffs, f);
    RepMap g2 = square(g, f);
    bool idem = true;
    for (std::size_t v = 0; v < g.blocks.size() && idem; ++v)
      idem = (g.blocks[v] == g2.blocks[v]);
    if (idem && !blocks_zero(g) && !blocks_identity(g)) return false;
  }
  return true;
}

bool modules_isomorphic(const Representation& m, const Representation& n) {
  if (m.algebra != n.algebra)
    fail(ErrorKind::AlgebraMismatch, "isomorphism test needs a common algebra");
  require_finite_field(m.algebra->field(), "isomorphism search");
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  const Field& f = m.algebra->field();
  HomBasis hom = hom_space(m, n);
  if (hom.dim == 0) return false;
  if (hom.dim > 20)
    fail(ErrorKind::BudgetExceeded, "hom space too large for the isomorphism scan");
  std::uint32_t p = f.characteristic();
  std::vector<std::uint32_t> digits(hom.dim, 0);
  std::vector<Rational> coeffs(hom.dim, f.zero());
  while (next_tuple(digits, p)) {
    for (std::size_t i = 0; i < hom.dim; ++i) coeffs[i] = Rational(digits[i]);
    if (blocks_invertible(combine(hom.maps, coeffs, f), f)) return true;
  }
  return false;
}

namespace {

// mixed-radix odometer over dimension vectors bounded entrywise
bool next_dim_vector(std::vector<std::size_t>& dims, const std::vector<std::size_t>& bound) {
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (++dims[i] <= bound[i]) return true;
    dims[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<Representation> enumerate_indecomposables(const AlgebraInstance& a,
                                                      const std::vector<std::size_t>& bound,
                                                      std::size_t budget) {
  const Field& f = a.field();
  require_finite_field(f, "module enumeration");
  if (bound.size() != a.vertex_count())
    fail(ErrorKind::InvalidInput, "bound needs one entry per vertex");
  std::uint32_t p = f.characteristic();
  std::vector<CompiledRelation> rels = compile_relations(a);

  struct IsoClass {
    Representation rep;
    std::vector<std::size_t> print;
    std::size_t end_dim = 0;  // 0 = not yet computed
  };
  // iso classes bucketed per dimension vector
  std::map<std::vector<std::size_t>, std::vector<IsoClass>> classes;
  std::size_t consumed = 0;

  std::vector<std::size_t> dims(a.vertex_count(), 0);
  while (next_dim_vector(dims, bound)) {
    // entry count of one matrix tuple, and the number of tuples
    std::size_t entries = 0;
    for (std::size_t ar = 0; ar < a.arrow_count(); ++ar)
      entries += dims[a.arrow_dst(static_cast<int>(ar))] * dims[a.arrow_src(static_cast<int>(ar))];
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < entries; ++i) {
      if (tuples > budget / p + 1)
        fail(ErrorKind::BudgetExceeded, "matrix-tuple count overflows the budget");
      tuples *= p;
    }
    if (consumed + tuples > budget)
      fail(ErrorKind::BudgetExceeded,
           "enumeration budget of " + std::to_string(budget) + " matrix tuples exceeded");
    consumed += tuples;

    Representation m;
    m.algebra = &a;
    m.dims = dims;
    m.arrow_maps.resize(a.arrow_count());
    std::vector<std::uint32_t> digits(entries, 0);
    bool more = true;
    while (more) {
      // materialize the tuple
      std::size_t pos = 0;
      for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
        std::size_t rows = dims[a.arrow_dst(static_cast<int>(ar))];
        std::size_t cols = dims[a.arrow_src(static_cast<int>(ar))];
        Matrix b(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
          for (std::size_t c = 0; c < cols; ++c) b.at(r, c) = Rational(digits[pos++]);
        m.arrow_maps[ar] = std::move(b);
      }
      more = next_tuple(digits, p);
      if (!satisfies_relations(m, rels)) continue;
      std::vector<std::size_t> print = fingerprint(m);
      std::size_t m_end = 0;  // lazily computed
      bool known = false;
      for (IsoClass& cls : classes[dims]) {
        if (cls.print != print) continue;
        if (cls.end_dim == 0) cls.end_dim = hom_space(cls.rep, cls.rep).dim;
        if (m_end == 0) m_end = hom_space(m, m).dim;
        if (cls.end_dim != m_end) continue;
        if (modules_isomorphic(m, cls.rep)) {
          known = true;
          break;
        }
      }
      if (!known) classes[dims].push_back({m, print, 0});
    }
  }

  std::vector<Representation> out;
  for (auto& [d, bucket] : classes)
    for (IsoClass& cls : bucket)
      if (is_indecomposable(cls.rep)) out.push_back(std::move(cls.rep));
  std::sort(out.begin(), out.end(), [](const Representation& x, const Representation& y) {
    return sort_key(x) < sort_key(y);
  });
  return out;
}

StableGpQuiver stable_gp_quiver(const AlgebraInstance& a, const std::vector<std::size_t>& bound,
                                std::size_t budget, int gorenstein_cap) {
  const Field& f = a.field();
  std::vector<Representation> all = enumerate_indecomposables(a, bound, budget);
  StableGpQuiver out;
  for (Representation& m : all) {
    bool projective = minimal_projective_resolution(m, 0).complete;
    if (projective) continue;
    if (!is_gorenstein_projective(a, m, gorenstein_cap).gorenstein_projective) continue;
    out.modules.push_back(std::move(m));
  }
  std::size_t n = out.modules.size();
  for (std::size_t i = 0; i < n; ++i)
    out.quiver.vertices.push_back("M" + std::to_string(i + 1));

  // full hom spaces, projective parts, and radical bases for every pair
  std::vector<ProjCover> covers;
  for (const Representation& m : out.modules) covers.push_back(projective_cover(m));
  // rad(i,j) as concrete maps: everything for i != j; the non-invertible
  // part of the (local) endomorphism algebra for i == j
  std::vector<std::vector<std::vector<RepMap>>> rad(n, std::vector<std::vector<RepMap>>(n));
  std::vector<std::vector<std::vector<Vec>>> proj_part(n, std::vector<std::vector<Vec>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      proj_part[i][j] = projective_part(out.modules[i], out.modules[j], covers[j]);
      HomBasis hom = hom_space(out.modules[i], out.modules[j]);
      if (i != j) {
        rad[i][j] = hom.maps;
        continue;
      }
      // End(M_i) is local: its radical is the set of nilpotent elements
      if (hom.dim > 20)
        fail(ErrorKind::BudgetExceeded, "endomorphism algebra too large for the radical scan");
      std::uint32_t p = f.characteristic();
      std::size_t coords = hom_coords(out.modules[i], out.modules[i]);
      std::vector<std::uint32_t> digits(hom.dim, 0);
      std::vector<Rational> coeffs(hom.dim, f.zero());
      std::vector<Vec> nilpotent_flat;
      std::vector<RepMap> nilpotent_maps;
      while (next_tuple(digits, p)) {
        for (std::size_t t = 0; t < hom.dim; ++t) coeffs[t] = Rational(digits[t]);
        RepMap g = combine(hom.maps, coeffs, f);
        if (!blocks_zero(power(g, out.modules[i].total_dim(), f))) continue;
        Vec flat = flatten_map(g);
        if (in_span(nilpotent_flat, flat, coords, f)) continue;
        nilpotent_flat.push_back(flat);
        nilpotent_maps.push_back(std::move(g));
      }
      rad[i][i] = std::move(nilpotent_maps);
    }

  // arrow counts: dim stable-rad / stable-rad^2
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t coords = hom_coords(out.modules[i], out.modules[j]);
      std::size_t proj_dim = span_dim(proj_part[i][j], coords, f);
      std::vector<Vec> rad_flat = proj_part[i][j];
      for (const RepMap& g : rad[i][j]) rad_flat.push_back(flatten_map(g));
      std::size_t stable_rad = span_dim(rad_flat, coords, f) - proj_dim;
      std::vector<Vec> rad2_flat = proj_part[i][j];
      for (std::size_t k = 0; k < n; ++k)
        for (const RepMap& g1 : rad[i][k])
          for (const RepMap& g2 : rad[k][j])
            rad2_flat.push_back(flatten_map(compose_maps(g2, g1, f)));
      std::size_t stable_rad2 = span_dim(rad2_flat, coords, f) - proj_dim;
      for (std::size_t t = 0; t < stable_rad - stable_rad2; ++t)
        out.quiver.arrows.push_back({"r" + std::to_string(i + 1) + "_" + std::to_string(j + 1) +
                                         "_" + std::to_string(t + 1),
                                     out.quiver.vertices[i], out.quiver.vertices[j]});
    }

  // syzygy pairing
  for (std::size_t i = 0; i < n; ++i) {
    Representation om = syzygy(out.modules[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (modules_isomorphic(om, out.modules[j])) {
        out.syzygy_pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
        break;
      }
  }
  return out;
}

std::vector<std::vector<int>> stable_gp_components(const StableGpQuiver& q) {
  std::size_t n = q.quiver.vertices.size();
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < n; ++i) index[q.quiver.vertices[i]] = static_cast<int>(i);
  for (const Arrow& a : q.quiver.arrows) unite(index[a.src], index[a.dst]);
  for (const auto& [i, j] : q.syzygy_pairs) unite(i, j);
  std::map<int, std::vector<int>> buckets;
  for (std::size_t i = 0; i < n; ++i) buckets[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : buckets) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arsob
