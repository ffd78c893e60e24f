#include "arsobstruct/rep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "arsobstruct/errors.hpp"

namespace arsob {

namespace {

const Field& field_of(const Representation& m) { return m.algebra->field(); }

void require_same_algebra(const Representation& m, const Representation& n) {
  if (m.algebra == nullptr || n.algebra == nullptr || m.algebra != n.algebra)
    fail(ErrorKind::AlgebraMismatch, "representations over different algebra instances");
}

// image of a vector at vertex src(word) under the path action (diagrammatic)
Vec apply_word(const Representation& m, const std::vector<int>& word, Vec v) {
  for (int a : word) v = m.arrow_maps[a].apply(v, field_of(m));
  return v;
}

}  // namespace

Vec flatten_map(const RepMap& f) {
  Vec out;
  for (const Matrix& b : f.blocks)
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out.push_back(b.at(r, c));
  return out;
}

RepMap compose_maps(const RepMap& outer, const RepMap& inner, const Field& f) {
  RepMap out;
  out.blocks.reserve(outer.blocks.size());
  for (std::size_t v = 0; v < outer.blocks.size(); ++v)
    out.blocks.push_back(outer.blocks[v].multiply(inner.blocks[v], f));
  return out;
}

// minimal projective cover: generators lift a deterministic basis of top M
ProjCover projective_cover(const Representation& m) {
  const AlgebraInstance& a = *m.algebra;
  const Field& f = a.field();
  std::vector<int> gens;
  std::vector<Vec> images;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    // rad M at v = sum of images of all arrow maps ending at v
    std::vector<Vec> spanning;
    for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
      if (a.arrow_dst(static_cast<int>(ar)) != static_cast<int>(v)) continue;
      const Matrix& mat = m.arrow_maps[ar];
      for (std::size_t c = 0; c < mat.cols(); ++c) {
        Vec col(mat.rows());
        for (std::size_t r = 0; r < mat.rows(); ++r) col[r] = mat.at(r, c);
        spanning.push_back(std::move(col));
      }
    }
    for (std::size_t i = 0; i < m.dims[v]; ++i) {
      Vec e(m.dims[v], f.zero());
      e[i] = f.one();
      if (in_span(spanning, e, m.dims[v], f)) continue;
      gens.push_back(static_cast<int>(v));
      images.push_back(e);
      spanning.push_back(std::move(e));
    }
  }
  ProjCover c{make_projective(a, gens), {}};
  c.map = proj_map_from_generators(c.p, m, images);
  return c;
}

namespace {

struct SubRep {
  Representation rep;
  RepMap incl;  // into the ambient representation
};

// kernel of a module map phi: ambient -> target, as a subrepresentation
SubRep kernel_subrep(const RepMap& phi, const Representation& ambient) {
  const AlgebraInstance& a = *ambient.algebra;
  const Field& f = a.field();
  SubRep s;
  s.rep.algebra = &a;
  s.rep.dims.resize(a.vertex_count());
  std::vector<std::vector<Vec>> kernels(a.vertex_count());
  s.incl.blocks.resize(a.vertex_count());
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    kernels[v] = kernel_basis(phi.blocks[v], f);
    s.rep.dims[v] = kernels[v].size();
    Matrix incl(ambient.dims[v], kernels[v].size());
    for (std::size_t c = 0; c < kernels[v].size(); ++c)
      for (std::size_t r = 0; r < ambient.dims[v]; ++r) incl.at(r, c) = kernels[v][c][r];
    s.incl.blocks[v] = std::move(incl);
  }
  s.rep.arrow_maps.resize(a.arrow_count());
  for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
    int u = a.arrow_src(static_cast<int>(ar)), w = a.arrow_dst(static_cast<int>(ar));
    Matrix restricted(s.rep.dims[w], s.rep.dims[u]);
    for (std::size_t c = 0; c < s.rep.dims[u]; ++c) {
      Vec y = ambient.arrow_maps[ar].apply(kernels[u][c], f);
      Vec coords;
      if (!solve(s.incl.blocks[w], y, coords, f))
        fail(ErrorKind::AlgebraMismatch, "kernel is not arrow-stable");
      for (std::size_t r = 0; r < s.rep.dims[w]; ++r) restricted.at(r, c) = coords[r];
    }
    s.rep.arrow_maps[ar] = std::move(restricted);
  }
  return s;
}

// coordinates of Hom(P, N) by generator images; columns indexed by pairs
// (generator slot, coordinate of N at that generator's vertex)
std::size_t hom_from_proj_dim(const ProjModule& p, const Representation& n) {
  std::size_t d = 0;
  for (int g : p.gens) d += n.dims[g];
  return d;
}

// matrix of the map Hom(P_prev, N) -> Hom(P_next, N) induced by
// d: P_next -> P_prev (precomposition), in generator-image coordinates
Matrix induced_hom_matrix(const ProjModule& p_prev, const ProjModule& p_next,
                          const RepMap& d, const Representation& n) {
  const Field& f = field_of(n);
  std::size_t in_dim = hom_from_proj_dim(p_prev, n);
  std::size_t out_dim = hom_from_proj_dim(p_next, n);
  Matrix out(out_dim, in_dim);
  // positions of the generator basis vectors inside P_next
  std::vector<std::size_t> gen_pos(p_next.gens.size());
  for (std::size_t k = 0; k < p_next.gens.size(); ++k) {
    int v = p_next.gens[k];
    const auto& at_v = p_next.basis_at[v];
    bool found = false;
    for (std::size_t pos = 0; pos < at_v.size(); ++pos)
      if (at_v[pos].first == static_cast<int>(k) &&
          p_next.rep.algebra->basis_path(at_v[pos].second).length() == 0) {
        gen_pos[k] = pos;
        found = true;
      }
    if (!found) fail(ErrorKind::AlgebraMismatch, "generator basis vector missing");
  }
  std::size_t col = 0;
  for (std::size_t l = 0; l < p_prev.gens.size(); ++l) {
    int gv = p_prev.gens[l];
    for (std::size_t t = 0; t < n.dims[gv]; ++t, ++col) {
      std::vector<Vec> images;
      for (std::size_t j = 0; j < p_prev.gens.size(); ++j) {
        Vec im(n.dims[p_prev.gens[j]], f.zero());
        if (j == l) im[t] = f.one();
        images.push_back(std::move(im));
      }
      RepMap phi = proj_map_from_generators(p_prev, n, images);
      RepMap composed = compose_maps(phi, d, f);
      std::size_t row = 0;
      for (std::size_t k = 0; k < p_next.gens.size(); ++k) {
        int v = p_next.gens[k];
        for (std::size_t r = 0; r < n.dims[v]; ++r, ++row)
          out.at(row, col) = composed.blocks[v].at(r, gen_pos[k]);
      }
    }
  }
  return out;
}

// dims of Ext^k(M, N) for k = 0..kmax from one resolution
std::vector<std::size_t> ext_dims_range(const Representation& m, const Representation& n,
                                        int kmax) {
  require_same_algebra(m, n);
  const Field& f = field_of(m);
  Resolution res = minimal_projective_resolution(m, kmax + 1);
  std::vector<std::size_t> hom_dims;  // dim Hom(P_i, N)
  for (const ProjModule& p : res.projectives) hom_dims.push_back(hom_from_proj_dim(p, n));
  std::vector<std::size_t> dstar_rank(res.projectives.size() + 1, 0);
  for (std::size_t i = 0; i < res.differentials.size(); ++i)
    dstar_rank[i + 1] = rank(
        induced_hom_matrix(res.projectives[i], res.projectives[i + 1], res.differentials[i], n),
        f);
  std::vector<std::size_t> out(static_cast<std::size_t>(kmax) + 1, 0);
  out[0] = hom_space(m, n).dim;
  for (int k = 1; k <= kmax; ++k) {
    if (static_cast<std::size_t>(k) >= res.projectives.size()) break;  // resolution ended
    std::size_t up = static_cast<std::size_t>(k) + 1 <= res.projectives.size()
                         ? dstar_rank[k + 1]
                         : 0;
    out[k] = hom_dims[k] - dstar_rank[k] - up;
  }
  return out;
}

bool is_idempotent_pos(const ProjModule& p, int v, std::size_t pos) {
  return p.rep.algebra->basis_path(p.basis_at[v][pos].second).length() == 0;
}

}  // namespace

Representation syzygy(const Representation& m) {
  ProjCover c = projective_cover(m);
  return kernel_subrep(c.map, c.p.rep).rep;
}

std::size_t Representation::total_dim() const {
  std::size_t t = 0;
  for (std::size_t d : dims) t += d;
  return t;
}

Matrix Representation::eval_word(const std::vector<int>& word) const {
  if (word.empty()) fail(ErrorKind::InvalidInput, "eval_word needs a nonempty word");
  const Field& f = algebra->field();
  Matrix acc = Matrix::identity(dims[algebra->arrow_src(word.front())]);
  for (int a : word) acc = arrow_maps[a].multiply(acc, f);
  return acc;
}

void Representation::validate() const {
  if (algebra == nullptr) fail(ErrorKind::AlgebraMismatch, "representation has no algebra");
  const AlgebraInstance& a = *algebra;
  const Field& f = a.field();
  if (dims.size() != a.vertex_count() || arrow_maps.size() != a.arrow_count())
    fail(ErrorKind::AlgebraMismatch, "representation shape does not match the algebra");
  for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
    int u = a.arrow_src(static_cast<int>(ar)), w = a.arrow_dst(static_cast<int>(ar));
    if (arrow_maps[ar].rows() != dims[w] || arrow_maps[ar].cols() != dims[u])
      fail(ErrorKind::AlgebraMismatch,
           "matrix for arrow " + a.arrow_name(static_cast<int>(ar)) + " has the wrong shape");
  }
  for (const Relation& rel : a.presentation().relations) {
    int src = a.vertex_index(rel.src), dst = a.vertex_index(rel.dst);
    Matrix sum(dims[dst], dims[src]);
    for (const PathTerm& term : rel.terms) {
      std::vector<int> word;
      for (const std::string& name : term.arrows) word.push_back(a.arrow_index(name));
      Matrix e = eval_word(word);
      Matrix scaled(e.rows(), e.cols());
      Rational c = f.make(term.coeff);
      for (std::size_t r = 0; r < e.rows(); ++r)
        for (std::size_t cc = 0; cc < e.cols(); ++cc)
          scaled.at(r, cc) = f.mul(c, e.at(r, cc));
      sum = sum.add(scaled, f);
    }
    if (!sum.is_zero())
      fail(ErrorKind::AlgebraMismatch, "relation does not vanish on the representation");
  }
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_same_algebra(a, b);
  Representation out;
  out.algebra = a.algebra;
  out.dims.resize(a.dims.size());
  for (std::size_t v = 0; v < a.dims.size(); ++v) out.dims[v] = a.dims[v] + b.dims[v];
  const AlgebraInstance& alg = *a.algebra;
  out.arrow_maps.resize(alg.arrow_count());
  for (std::size_t ar = 0; ar < alg.arrow_count(); ++ar) {
    int u = alg.arrow_src(static_cast<int>(ar)), w = alg.arrow_dst(static_cast<int>(ar));
    Matrix block(out.dims[w], out.dims[u]);
    const Matrix& x = a.arrow_maps[ar];
    const Matrix& y = b.arrow_maps[ar];
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) block.at(r, c) = x.at(r, c);
    for (std::size_t r = 0; r < y.rows(); ++r)
      for (std::size_t c = 0; c < y.cols(); ++c)
        block.at(a.dims[w] + r, a.dims[u] + c) = y.at(r, c);
    out.arrow_maps[ar] = std::move(block);
  }
  return out;
}

ProjModule make_projective(const AlgebraInstance& a, const std::vector<int>& gens) {
  const Field& f = a.field();
  ProjModule p;
  p.gens = gens;
  p.rep.algebra = &a;
  p.basis_at.resize(a.vertex_count());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t b = 0; b < a.dimension(); ++b)
      if (a.basis_path(b).src == gens[k])
        p.basis_at[a.basis_path(b).dst].push_back({static_cast<int>(k), b});
  p.rep.dims.resize(a.vertex_count());
  std::vector<std::map<std::pair<int, std::size_t>, std::size_t>> pos(a.vertex_count());
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    p.rep.dims[v] = p.basis_at[v].size();
    for (std::size_t i = 0; i < p.basis_at[v].size(); ++i) pos[v][p.basis_at[v][i]] = i;
  }
  // basis index of each single-arrow path (arrows are always normal words)
  std::vector<std::size_t> arrow_basis(a.arrow_count());
  for (std::size_t b = 0; b < a.dimension(); ++b)
    if (a.basis_path(b).length() == 1) arrow_basis[a.basis_path(b).arrows[0]] = b;
  p.rep.arrow_maps.resize(a.arrow_count());
  for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
    int u = a.arrow_src(static_cast<int>(ar)), w = a.arrow_dst(static_cast<int>(ar));
    Matrix mat(p.rep.dims[w], p.rep.dims[u]);
    for (std::size_t c = 0; c < p.basis_at[u].size(); ++c) {
      auto [k, b] = p.basis_at[u][c];
      Vec prod = a.multiply_basis(b, arrow_basis[ar]);
      for (std::size_t t = 0; t < prod.size(); ++t) {
        if (prod[t] == 0) continue;
        auto it = pos[w].find({k, t});
        if (it == pos[w].end())
          fail(ErrorKind::BasisMismatch, "projective action left the expected sector");
        mat.at(it->second, c) = f.make(prod[t]);
      }
    }
    p.rep.arrow_maps[ar] = std::move(mat);
  }
  return p;
}

RepMap proj_map_from_generators(const ProjModule& p, const Representation& m,
                                const std::vector<Vec>& images) {
  const AlgebraInstance& a = *p.rep.algebra;
  if (m.algebra != &a)
    fail(ErrorKind::AlgebraMismatch, "projective and target over different algebras");
  if (images.size() != p.gens.size())
    fail(ErrorKind::AlgebraMismatch, "one image per generator required");
  for (std::size_t k = 0; k < images.size(); ++k)
    if (images[k].size() != m.dims[p.gens[k]])
      fail(ErrorKind::AlgebraMismatch, "generator image has the wrong dimension");
  RepMap out;
  out.blocks.resize(a.vertex_count());
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    Matrix block(m.dims[v], p.rep.dims[v]);
    for (std::size_t c = 0; c < p.basis_at[v].size(); ++c) {
      auto [k, b] = p.basis_at[v][c];
      Vec img = apply_word(m, a.basis_path(b).arrows, images[k]);
      for (std::size_t r = 0; r < img.size(); ++r) block.at(r, c) = img[r];
    }
    out.blocks[v] = std::move(block);
  }
  return out;
}

Representation standard_module(const AlgebraInstance& a, StandardKind kind,
                               const std::string& vertex) {
  int v = a.vertex_index(vertex);
  switch (kind) {
    case StandardKind::simple: {
      Representation m;
      m.algebra = &a;
      m.dims.assign(a.vertex_count(), 0);
      m.dims[v] = 1;
      for (std::size_t ar = 0; ar < a.arrow_count(); ++ar)
        m.arrow_maps.push_back(Matrix(m.dims[a.arrow_dst(static_cast<int>(ar))],
                                      m.dims[a.arrow_src(static_cast<int>(ar))]));
      return m;
    }
    case StandardKind::projective:
      return make_projective(a, {v}).rep;
    case StandardKind::injective: {
      AlgebraInstance op = instantiate(opposite_presentation(a.presentation()));
      ProjModule p = make_projective(op, {op.vertex_index(vertex)});
      // dual back over the original algebra: transpose each arrow matrix
      Representation m;
      m.algebra = &a;
      m.dims = p.rep.dims;
      m.arrow_maps.resize(a.arrow_count());
      for (std::size_t ar = 0; ar < a.arrow_count(); ++ar)
        m.arrow_maps[ar] = p.rep.arrow_maps[ar].transpose();
      return m;
    }
  }
  fail(ErrorKind::InvalidInput, "unknown standard module kind");
}

Representation regular_module(const AlgebraInstance& a) {
  std::vector<int> gens;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) gens.push_back(static_cast<int>(v));
  return make_projective(a, gens).rep;
}

HomBasis hom_space(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  const AlgebraInstance& a = *m.algebra;
  const Field& f = a.field();
  // unknowns: entries of the per-vertex blocks, vertex-major then row-major
  std::vector<std::size_t> offset(a.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  std::size_t unknowns = offset[a.vertex_count()];
  std::vector<Vec> eq_rows;
  for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
    int u = a.arrow_src(static_cast<int>(ar)), w = a.arrow_dst(static_cast<int>(ar));
    const Matrix& mm = m.arrow_maps[ar];
    const Matrix& nn = n.arrow_maps[ar];
    // phi_w * M_a - N_a * phi_u = 0, entrywise
    for (std::size_t r = 0; r < n.dims[w]; ++r)
      for (std::size_t c = 0; c < m.dims[u]; ++c) {
        Vec row(unknowns, f.zero());
        for (std::size_t s = 0; s < m.dims[w]; ++s)
          row[offset[w] + r * m.dims[w] + s] =
              f.add(row[offset[w] + r * m.dims[w] + s], mm.at(s, c));
        for (std::size_t s = 0; s < n.dims[u]; ++s)
          row[offset[u] + s * m.dims[u] + c] =
              f.sub(row[offset[u] + s * m.dims[u] + c], nn.at(r, s));
        eq_rows.push_back(std::move(row));
      }
  }
  Matrix eq(eq_rows.size(), unknowns);
  for (std::size_t r = 0; r < eq_rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) eq.at(r, c) = eq_rows[r][c];
  std::vector<Vec> ker = kernel_basis(eq, f);
  HomBasis out;
  out.dim = ker.size();
  for (const Vec& x : ker) {
    RepMap map;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
      Matrix block(n.dims[v], m.dims[v]);
      for (std::size_t r = 0; r < n.dims[v]; ++r)
        for (std::size_t c = 0; c < m.dims[v]; ++c)
          block.at(r, c) = x[offset[v] + r * m.dims[v] + c];
      map.blocks.push_back(std::move(block));
    }
    out.maps.push_back(std::move(map));
  }
  return out;
}

std::size_t stable_hom_dim(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  const Field& f = field_of(m);
  HomBasis full = hom_space(m, n);
  if (full.dim == 0) return 0;
  ProjCover cover = projective_cover(n);  // pi: P(N) -> N
  HomBasis lifts = hom_space(m, cover.p.rep);
  std::size_t total = 0;
  for (std::size_t v = 0; v < m.dims.size(); ++v) total += n.dims[v] * m.dims[v];
  std::vector<Vec> projective_part;
  for (const RepMap& g : lifts.maps) projective_part.push_back(flatten_map(compose_maps(cover.map, g, f)));
  // stable dim = dim Hom(M,N) - dim { pi . g : g in Hom(M, P(N)) }
  return full.dim - span_dim(projective_part, total, f);
}

Resolution minimal_projective_resolution(const Representation& m, int degree) {
  m.validate();
  Resolution res;
  res.target_dims = m.dims;
  const Field& f = field_of(m);
  ProjCover c = projective_cover(m);
  res.projectives.push_back(c.p);
  res.augmentation = c.map;
  for (int k = 1; k <= degree; ++k) {
    SubRep s = kernel_subrep(c.map, res.projectives.back().rep);
    if (s.rep.total_dim() == 0) {
      res.complete = true;
      return res;
    }
    ProjCover next = projective_cover(s.rep);
    res.differentials.push_back(compose_maps(s.incl, next.map, f));
    res.projectives.push_back(next.p);
    c = std::move(next);
  }
  SubRep s = kernel_subrep(c.map, res.projectives.back().rep);
  res.complete = (s.rep.total_dim() == 0);
  return res;
}

bool Resolution::is_exact() const {
  if (projectives.empty()) return true;
  const Field& f = projectives[0].rep.algebra->field();
  std::size_t vertices = projectives[0].rep.dims.size();
  for (std::size_t v = 0; v < vertices; ++v) {
    // augmentation surjective
    if (rank(augmentation.blocks[v], f) != target_dims[v]) return false;
    if (complete && differentials.empty() &&
        rank(augmentation.blocks[v], f) != augmentation.blocks[v].cols())
      return false;  // pdim 0: the cover must also be injective
    for (std::size_t i = 0; i < differentials.size(); ++i) {
      const Matrix& incoming = differentials[i].blocks[v];  // P_{i+1} -> P_i
      const Matrix& outgoing = (i == 0) ? augmentation.blocks[v] : differentials[i - 1].blocks[v];
      // im(incoming) = ker(outgoing): rank certification
      std::size_t middle = projectives[i].rep.dims[v];
      if (rank(incoming, f) + rank(outgoing, f) != middle) return false;
      // complex property: outgoing . incoming = 0
      if (!outgoing.multiply(incoming, f).is_zero()) return false;
    }
    if (complete && !differentials.empty()) {
      // the last differential is injective
      const Matrix& last = differentials.back().blocks[v];
      if (rank(last, f) != last.cols()) return false;
    }
  }
  return true;
}

bool Resolution::is_minimal() const {
  for (std::size_t i = 0; i < differentials.size(); ++i) {
    const ProjModule& from = projectives[i + 1];
    const ProjModule& to = projectives[i];
    for (std::size_t v = 0; v < from.basis_at.size(); ++v)
      for (std::size_t c = 0; c < from.basis_at[v].size(); ++c) {
        if (!is_idempotent_pos(from, static_cast<int>(v), c)) continue;
        for (std::size_t r = 0; r < to.basis_at[v].size(); ++r)
          if (is_idempotent_pos(to, static_cast<int>(v), r) &&
              differentials[i].blocks[v].at(r, c) != 0)
            return false;
      }
  }
  return true;
}

std::size_t ext_dim(const Representation& m, const Representation& n, int k) {
  if (k < 0) fail(ErrorKind::InvalidInput, "Ext degree must be nonnegative");
  if (k == 0) return hom_space(m, n).dim;
  return ext_dims_range(m, n, k)[k];
}

HomDim homological_dimension(const Representation& m, HomSide side, int cap) {
  if (side == HomSide::projective) {
    Resolution res = minimal_projective_resolution(m, cap);
    if (!res.complete) return {cap, true};
    return {static_cast<int>(res.projectives.size()) - 1, false};
  }
  // injective dimension = projective dimension of the dual over the opposite
  AlgebraInstance op = instantiate(opposite_presentation(m.algebra->presentation()));
  Representation dual = dual_representation(m, op);
  Resolution res = minimal_projective_resolution(dual, cap);
  if (!res.complete) return {cap, true};
  return {static_cast<int>(res.projectives.size()) - 1, false};
}

Representation dual_representation(const Representation& m, const AlgebraInstance& op) {
  const AlgebraInstance& a = *m.algebra;
  if (op.vertex_count() != a.vertex_count() || op.arrow_count() != a.arrow_count())
    fail(ErrorKind::AlgebraMismatch, "opposite instance does not match");
  Representation out;
  out.algebra = &op;
  out.dims = m.dims;
  out.arrow_maps.resize(a.arrow_count());
  for (std::size_t ar = 0; ar < a.arrow_count(); ++ar)
    out.arrow_maps[ar] = m.arrow_maps[ar].transpose();
  return out;
}

GorensteinReport is_gorenstein(const AlgebraInstance& a, int cap) {
  GorensteinReport rep;
  rep.right_injective_dim = homological_dimension(regular_module(a), HomSide::injective, cap);
  AlgebraInstance op = instantiate(opposite_presentation(a.presentation()));
  // left injective dimension = projective dimension over a of the dual of
  // the regular module of the opposite algebra
  Representation left_dual = dual_representation(regular_module(op), a);
  rep.left_injective_dim = homological_dimension(left_dual, HomSide::projective, cap);
  rep.gorenstein = !rep.left_injective_dim.at_least && !rep.right_injective_dim.at_least;
  return rep;
}

GpCertificate is_gorenstein_projective(const AlgebraInstance& a, const Representation& m,
                                       int cap) {
  if (m.algebra != &a) fail(ErrorKind::AlgebraMismatch, "module not over the given algebra");
  GorensteinReport g = is_gorenstein(a, cap);
  if (!g.gorenstein)
    fail(ErrorKind::GorensteinUnverified,
         "algebra not verified Gorenstein within cap " + std::to_string(cap));
  int upper = std::max({g.left_injective_dim.value, g.right_injective_dim.value, 1});
  Representation lambda = regular_module(a);
  std::vector<std::size_t> dims = ext_dims_range(m, lambda, upper);
  GpCertificate cert;
  cert.gorenstein_projective = true;
  for (int i = 1; i <= upper; ++i) {
    cert.checked_degrees.push_back(i);
    if (dims[i] != 0) {
      cert.gorenstein_projective = false;
      cert.failed_degree = i;
      break;
    }
  }
  return cert;
}

Representation parse_representation(const AlgebraInstance& a, const std::string& text) {
  const Field& f = a.field();
  Representation m;
  m.algebra = &a;
  m.dims.assign(a.vertex_count(), 0);
  std::vector<bool> have_matrix(a.arrow_count(), false);
  m.arrow_maps.resize(a.arrow_count());
  std::istringstream in(text);
  std::string line;
  int pending_arrow = -1;
  std::size_t pending_row = 0;
  bool saw_dims = false;
  auto strip = [](std::string s) {
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
  };
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (pending_arrow >= 0) {
      // expect a matrix row
      std::size_t rows = m.dims[a.arrow_dst(pending_arrow)];
      std::size_t cols = m.dims[a.arrow_src(pending_arrow)];
      std::istringstream row_in(line);
      std::string tok;
      for (std::size_t c = 0; c < cols; ++c) {
        if (!(row_in >> tok))
          fail(ErrorKind::SyntaxError, "matrix row too short for arrow " +
                                           a.arrow_name(pending_arrow));
        m.arrow_maps[pending_arrow].at(pending_row, c) = f.parse(tok);
      }
      if (row_in >> tok) fail(ErrorKind::SyntaxError, "matrix row too long");
      if (++pending_row == rows) pending_arrow = -1;
      continue;
    }
    if (head == "dims") {
      saw_dims = true;
      std::string pair;
      while (ls >> pair) {
        auto eq = pair.find('=');
        if (eq == std::string::npos) fail(ErrorKind::SyntaxError, "expected vertex=dim");
        int v = a.vertex_index(pair.substr(0, eq));
        m.dims[v] = static_cast<std::size_t>(std::stoul(pair.substr(eq + 1)));
      }
    } else if (head == "matrix") {
      std::string name;
      if (!(ls >> name)) fail(ErrorKind::SyntaxError, "matrix needs an arrow name");
      int ar = a.arrow_index(name);
      if (have_matrix[ar]) fail(ErrorKind::SyntaxError, "duplicate matrix for " + name);
      have_matrix[ar] = true;
      std::size_t rows = m.dims[a.arrow_dst(ar)];
      std::size_t cols = m.dims[a.arrow_src(ar)];
      m.arrow_maps[ar] = Matrix(rows, cols);
      if (rows > 0 && cols > 0) {
        pending_arrow = ar;
        pending_row = 0;
      }
    } else {
      fail(ErrorKind::SyntaxError, "unknown line: " + line);
    }
  }
  if (pending_arrow >= 0) fail(ErrorKind::SyntaxError, "unterminated matrix block");
  if (!saw_dims) fail(ErrorKind::SyntaxError, "missing dims line");
  for (std::size_t ar = 0; ar < a.arrow_count(); ++ar)
    if (!have_matrix[ar])
      m.arrow_maps[ar] = Matrix(m.dims[a.arrow_dst(static_cast<int>(ar))],
                                m.dims[a.arrow_src(static_cast<int>(ar))]);
  m.validate();
  return m;
}

std::string serialize_representation(const Representation& m) {
  const AlgebraInstance& a = *m.algebra;
  const Field& f = a.field();
  std::ostringstream out;
  out << "dims";
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    out << ' ' << a.vertex_name(static_cast<int>(v)) << '=' << m.dims[v];
  out << '\n';
  for (std::size_t ar = 0; ar < a.arrow_count(); ++ar) {
    const Matrix& mat = m.arrow_maps[ar];
    if (mat.rows() == 0 || mat.cols() == 0) continue;
    out << "matrix " << a.arrow_name(static_cast<int>(ar)) << '\n';
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      for (std::size_t c = 0; c < mat.cols(); ++c) {
        if (c) out << ' ';
        out << f.to_string(mat.at(r, c));
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace arsob
