#include "arsobstruct/quiver.hpp"

#include <algorithm>
#include <functional>

namespace arsob {

bool Quiver::has_vertex(const std::string& v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

void Quiver::validate() const {
  std::set<std::string> seen_vertices(vertices.begin(), vertices.end());
  if (seen_vertices.size() != vertices.size())
    fail(ErrorKind::InvalidInput, "duplicate vertex label");
  std::set<std::string> ids;
  for (const Arrow& a : arrows) {
    if (!seen_vertices.count(a.src) || !seen_vertices.count(a.dst))
      fail(ErrorKind::UnknownVertex, "arrow '" + a.id + "' references unknown vertex");
    if (!ids.insert(a.id).second)
      fail(ErrorKind::InvalidInput, "duplicate arrow id '" + a.id + "'");
  }
}

std::vector<std::string> Quiver::arrows_between(const std::string& x, const std::string& y) const {
  std::vector<std::string> out;
  for (const Arrow& a : arrows)
    if (a.src == x && a.dst == y) out.push_back(a.id);
  return out;
}

std::set<std::string> Quiver::successors(const std::string& x) const {
  std::set<std::string> out;
  for (const Arrow& a : arrows)
    if (a.src == x) out.insert(a.dst);
  return out;
}

std::set<std::string> Quiver::predecessors(const std::string& x) const {
  std::set<std::string> out;
  for (const Arrow& a : arrows)
    if (a.dst == x) out.insert(a.src);
  return out;
}

void ValuedQuiver::validate() const {
  quiver.validate();
  std::set<std::pair<std::string, std::string>> pairs;
  for (const Arrow& a : quiver.arrows) {
    if (!pairs.insert({a.src, a.dst}).second)
      fail(ErrorKind::DoubleArrow, "double arrow " + a.src + " -> " + a.dst);
    auto it = valuation.find(a.id);
    if (it == valuation.end())
      fail(ErrorKind::ValuationMismatch, "missing valuation for arrow '" + a.id + "'");
    if (it->second < 1)
      fail(ErrorKind::ValuationMismatch, "valuation < 1 on arrow '" + a.id + "'");
  }
}

int ValuedQuiver::valuation_of(const std::string& arrow_id) const {
  auto it = valuation.find(arrow_id);
  if (it == valuation.end())
    fail(ErrorKind::ValuationMismatch, "no valuation for arrow '" + arrow_id + "'");
  return it->second;
}

const std::string& ValuedTranslationQuiver::tau_of(const std::string& v) const {
  auto it = tau.find(v);
  if (it == tau.end()) fail(ErrorKind::UnknownVertex, "tau undefined on '" + v + "'");
  return it->second;
}

std::vector<std::vector<std::string>> ValuedTranslationQuiver::tau_orbits() const {
  std::vector<std::vector<std::string>> orbits;
  std::set<std::string> seen;
  for (const std::string& v : base.quiver.vertices) {
    if (seen.count(v)) continue;
    std::vector<std::string> orbit;
    std::string cur = v;
    while (!seen.count(cur)) {
      seen.insert(cur);
      orbit.push_back(cur);
      cur = tau_of(cur);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

ValuedTranslationQuiver build_translation_quiver(const ValuedQuiver& vq,
                                                 const std::map<std::string, std::string>& tau) {
  vq.validate();
  const Quiver& q = vq.quiver;

  // tau must be a bijection on the vertex set
  std::set<std::string> images;
  for (const std::string& v : q.vertices) {
    auto it = tau.find(v);
    if (it == tau.end())
      fail(ErrorKind::NotBijective, "tau undefined on vertex '" + v + "'");
    if (!q.has_vertex(it->second))
      fail(ErrorKind::NotBijective, "tau image '" + it->second + "' not a vertex");
    if (!images.insert(it->second).second)
      fail(ErrorKind::NotBijective, "tau not injective at image '" + it->second + "'");
  }
  if (tau.size() != q.vertices.size())
    fail(ErrorKind::NotBijective, "tau domain differs from the vertex set");

  // translation axiom: (tau x)^+ = x^- for every vertex x
  for (const std::string& x : q.vertices) {
    if (q.successors(tau.at(x)) != q.predecessors(x))
      fail(ErrorKind::AxiomViolation, "(tau x)^+ != x^- at vertex '" + x + "'");
  }

  // polarisation: alpha in Q_1(x,y) maps to the unique arrow in Q_1(tau y, x)
  ValuedTranslationQuiver tq;
  tq.base = vq;
  tq.tau = tau;
  for (const Arrow& a : q.arrows) {
    std::vector<std::string> candidates = q.arrows_between(tau.at(a.dst), a.src);
    if (candidates.size() != 1)
      fail(ErrorKind::AxiomViolation,
           "no unique polarisation image for arrow '" + a.id + "'");
    const std::string& image = candidates.front();
    if (vq.valuation_of(image) != vq.valuation_of(a.id))
      fail(ErrorKind::ValuationMismatch, "a(sigma alpha) != a(alpha) for arrow '" + a.id + "'");
    tq.polarisation[a.id] = image;
  }

  // sigma must be a bijection (injectivity; surjectivity then follows)
  std::set<std::string> sigma_images;
  for (const auto& [from, to] : tq.polarisation)
    if (!sigma_images.insert(to).second)
      fail(ErrorKind::AxiomViolation, "polarisation not injective at '" + to + "'");

  return tq;
}

std::set<std::string> detect_loops(const Quiver& q) {
  std::set<std::string> out;
  for (const Arrow& a : q.arrows)
    if (a.src == a.dst) out.insert(a.src);
  return out;
}

std::set<std::pair<std::string, std::string>> detect_two_cycles(const Quiver& q) {
  std::set<std::pair<std::string, std::string>> directed;
  for (const Arrow& a : q.arrows)
    if (a.src != a.dst) directed.insert({a.src, a.dst});
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [x, y] : directed)
    if (x < y && directed.count({y, x})) out.insert({x, y});
  return out;
}

ValuedTranslationQuiver remove_tau_orbits(const ValuedTranslationQuiver& tq,
                                          const std::vector<std::vector<std::string>>& orbits) {
  std::set<std::string> removed;
  for (const auto& orbit : orbits) {
    for (const std::string& v : orbit) {
      if (!tq.base.quiver.has_vertex(v))
        fail(ErrorKind::UnknownVertex, "orbit vertex '" + v + "' not in quiver");
      removed.insert(v);
    }
  }
  // each requested orbit must be closed under tau
  for (const std::string& v : removed) {
    if (!removed.count(tq.tau_of(v)))
      fail(ErrorKind::OrbitNotClosed, "orbit not closed under tau at vertex '" + v + "'");
  }

  ValuedQuiver sub;
  for (const std::string& v : tq.base.quiver.vertices)
    if (!removed.count(v)) sub.quiver.vertices.push_back(v);
  for (const Arrow& a : tq.base.quiver.arrows) {
    if (removed.count(a.src) || removed.count(a.dst)) continue;
    sub.quiver.arrows.push_back(a);
    sub.valuation[a.id] = tq.base.valuation_of(a.id);
  }
  std::map<std::string, std::string> sub_tau;
  for (const std::string& v : sub.quiver.vertices) sub_tau[v] = tq.tau_of(v);

  try {
    return build_translation_quiver(sub, sub_tau);
  } catch (const Error& e) {
    fail(ErrorKind::ResultNotTranslationQuiver,
         std::string("orbit removal broke the translation axioms: ") + e.what());
  }
}

std::vector<std::vector<std::string>> connected_components(const Quiver& q) {
  std::map<std::string, std::set<std::string>> adjacency;
  for (const std::string& v : q.vertices) adjacency[v];
  for (const Arrow& a : q.arrows) {
    adjacency[a.src].insert(a.dst);
    adjacency[a.dst].insert(a.src);
  }
  std::vector<std::vector<std::string>> components;
  std::set<std::string> seen;
  for (const std::string& start : q.vertices) {
    if (seen.count(start)) continue;
    // BFS preserving declaration order within the component
    std::set<std::string> component{start};
    std::vector<std::string> frontier{start};
    seen.insert(start);
    while (!frontier.empty()) {
      std::vector<std::string> next;
      for (const std::string& v : frontier)
        for (const std::string& w : adjacency[v])
          if (!seen.count(w)) {
            seen.insert(w);
            component.insert(w);
            next.push_back(w);
          }
      frontier = std::move(next);
    }
    std::vector<std::string> ordered;
    for (const std::string& v : q.vertices)
      if (component.count(v)) ordered.push_back(v);
    components.push_back(std::move(ordered));
  }
  return components;
}

namespace {

// Per-vertex structural invariants used for isomorphism pruning.
struct VertexSignature {
  std::multiset<int> out_valuations;
  std::multiset<int> in_valuations;
  bool has_loop = false;
  std::size_t tau_orbit_length = 0;

  bool operator==(const VertexSignature& other) const = default;
};

std::map<std::string, VertexSignature> signatures(const ValuedTranslationQuiver& tq) {
  std::map<std::string, VertexSignature> sig;
  for (const std::string& v : tq.base.quiver.vertices) sig[v];
  for (const Arrow& a : tq.base.quiver.arrows) {
    int val = tq.base.valuation_of(a.id);
    sig[a.src].out_valuations.insert(val);
    sig[a.dst].in_valuations.insert(val);
    if (a.src == a.dst) sig[a.src].has_loop = true;
  }
  for (const auto& orbit : tq.tau_orbits())
    for (const std::string& v : orbit) sig[v].tau_orbit_length = orbit.size();
  return sig;
}

}  // namespace

std::optional<std::map<std::string, std::string>> quiver_isomorphic(
    const ValuedTranslationQuiver& a, const ValuedTranslationQuiver& b, std::size_t vertex_cap) {
  const auto& av = a.base.quiver.vertices;
  const auto& bv = b.base.quiver.vertices;
  if (av.size() > vertex_cap || bv.size() > vertex_cap)
    fail(ErrorKind::SizeLimitExceeded, "isomorphism search vertex cap exceeded");
  if (av.size() != bv.size()) return std::nullopt;
  if (a.base.quiver.arrows.size() != b.base.quiver.arrows.size()) return std::nullopt;

  auto sig_a = signatures(a);
  auto sig_b = signatures(b);
  {
    // global invariant comparison (vertex signatures as multisets)
    std::multiset<std::size_t> orbit_a, orbit_b;
    for (const auto& o : a.tau_orbits()) orbit_a.insert(o.size());
    for (const auto& o : b.tau_orbits()) orbit_b.insert(o.size());
    if (orbit_a != orbit_b) return std::nullopt;
  }

  // arrow lookup with valuation for b
  std::map<std::pair<std::string, std::string>, int> arrows_b;
  for (const Arrow& ar : b.base.quiver.arrows)
    arrows_b[{ar.src, ar.dst}] = b.base.valuation_of(ar.id);

  std::map<std::string, std::string> mapping;  // a-vertex -> b-vertex
  std::set<std::string> used;

  std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    if (idx == av.size()) return true;
    const std::string& x = av[idx];
    for (const std::string& y : bv) {
      if (used.count(y)) continue;
      if (!(sig_a.at(x) == sig_b.at(y))) continue;
      // tau compatibility with already-placed vertices
      bool ok = true;
      const std::string& tax = a.tau_of(x);
      auto it = mapping.find(tax);
      if (it != mapping.end() && b.tau_of(y) != it->second) ok = false;
      if (ok) {
        for (const auto& [u, mu] : mapping) {
          if (a.tau_of(u) == x && b.tau_of(mu) != y) { ok = false; break; }
        }
      }
      // arrow compatibility with already-placed vertices (both directions)
      if (ok) {
        for (const auto& [u, mu] : mapping) {
          for (int dir = 0; dir < 2 && ok; ++dir) {
            const std::string& s = dir ? u : x;
            const std::string& t = dir ? x : u;
            const std::string& ms = dir ? mu : y;
            const std::string& mt = dir ? y : mu;
            auto ab = a.base.quiver.arrows_between(s, t);
            auto itb = arrows_b.find({ms, mt});
            if (ab.empty()) {
              if (itb != arrows_b.end()) ok = false;
            } else {
              if (itb == arrows_b.end() ||
                  itb->second != a.base.valuation_of(ab.front()))
                ok = false;
            }
          }
          if (!ok) break;
        }
      }
      if (!ok) continue;
      mapping[x] = y;
      used.insert(y);
      if (place(idx + 1)) return true;
      mapping.erase(x);
      used.erase(y);
    }
    return false;
  };

  if (place(0)) return mapping;
  return std::nullopt;
}

}  // namespace arsob
