#include "arsobstruct/mesh.hpp"

#include <algorithm>

#include "arsobstruct/errors.hpp"

namespace arsob {

DoubledQuiver double_quiver(const ValuedTranslationQuiver& tq) {
  DoubledQuiver out;
  out.quiver.vertices = tq.base.quiver.vertices;
  auto copy_name = [&](const Arrow& a, int k) {
    if (tq.base.valuation_of(a.id) == 1) return a.id;
    return a.id + "." + std::to_string(k + 1);
  };
  for (const Arrow& a : tq.base.quiver.arrows) {
    int v = tq.base.valuation_of(a.id);
    for (int k = 0; k < v; ++k) out.quiver.arrows.push_back({copy_name(a, k), a.src, a.dst});
  }
  for (const Arrow& a : tq.base.quiver.arrows) {
    const std::string& sigma = tq.polarisation.at(a.id);
    const Arrow* target = nullptr;
    for (const Arrow& b : tq.base.quiver.arrows)
      if (b.id == sigma) target = &b;
    int v = tq.base.valuation_of(a.id);
    for (int k = 0; k < v; ++k)
      out.polarisation[copy_name(a, k)] = copy_name(*target, k);
  }
  return out;
}

AlgebraPresentation mesh_presentation(const ValuedTranslationQuiver& tq, const Field& field) {
  DoubledQuiver dq = double_quiver(tq);
  AlgebraPresentation p;
  p.field = field;
  p.quiver.vertices = dq.quiver.vertices;
  // opposite of the doubled quiver: same ids, reversed direction
  for (const Arrow& a : dq.quiver.arrows) p.quiver.arrows.push_back({a.id, a.dst, a.src});
  // mesh relation at y: sum over expanded arrows alpha ending at y of the
  // reversed path  alpha^op . (sigma alpha)^op : y -> x -> tau(y)
  for (const std::string& y : dq.quiver.vertices) {
    Relation rel;
    rel.src = y;
    rel.dst = tq.tau_of(y);
    for (const Arrow& a : dq.quiver.arrows) {
      if (a.dst != y) continue;
      PathTerm term;
      term.coeff = Rational(1);
      term.arrows = {a.id, dq.polarisation.at(a.id)};
      rel.terms.push_back(std::move(term));
    }
    if (!rel.terms.empty()) p.relations.push_back(std::move(rel));
  }
  return p;
}

namespace {

std::vector<std::vector<std::string>> numbered_orbits(int first, int count) {
  std::vector<std::vector<std::string>> out;
  for (int k = 0; k < count; ++k)
    out.push_back({std::to_string(first + 2 * k), std::to_string(first + 2 * k + 1)});
  return out;
}

void verify_step(const Catalogue& cat, const ValuedTranslationQuiver& got,
                 const ADEType& expected) {
  if (!quiver_isomorphic(got, cat.get(expected).ar_quiver))
    fail(ErrorKind::ReductionMismatch,
         "orbit removal did not reproduce the " + expected.name() + " AR-quiver");
}

}  // namespace

ReductionResult reduce_ade(const Catalogue& cat, const ADEType& source) {
  ReductionResult out;
  out.source = source;
  ValuedTranslationQuiver current = cat.get(source).ar_quiver;
  auto apply = [&](const std::vector<std::vector<std::string>>& orbits, ADEType next) {
    current = remove_tau_orbits(current, orbits);
    verify_step(cat, current, next);
    out.steps.push_back({orbits, next});
  };
  if (source.family == ADEFamily::D && source.index % 2 == 1 && source.index >= 5) {
    int m = source.index / 2;
    // orbits (0,1), (2,3), ..., (4m-6, 4m-5)
    apply(numbered_orbits(0, 2 * m - 2), parse_ade("A3"));
  } else if (source.family == ADEFamily::E && source.index == 6) {
    apply({{"1", "2"}, {"6"}}, parse_ade("A3"));
  } else if (source.family == ADEFamily::E && source.index == 7) {
    apply({{"3", "4"}, {"5", "6"}, {"13", "14"}}, parse_ade("D4"));
  } else if (source.family == ADEFamily::E && source.index == 8) {
    apply({{"1", "2"}}, parse_ade("E7"));
    apply({{"3", "4"}, {"5", "6"}, {"13", "14"}}, parse_ade("D4"));
  } else {
    fail(ErrorKind::InvalidInput, source.name() + " has no defined orbit-removal reduction");
  }
  out.target = out.steps.back().resulting_type;
  out.result = current;
  return out;
}

ValuedTranslationQuiver drop_components(const ValuedTranslationQuiver& tq,
                                        const std::vector<std::string>& keep_vertices) {
  auto components = connected_components(tq.base.quiver);
  std::vector<bool> keep(components.size(), false);
  for (const std::string& name : keep_vertices) {
    bool found = false;
    for (std::size_t i = 0; i < components.size(); ++i)
      if (std::find(components[i].begin(), components[i].end(), name) != components[i].end()) {
        keep[i] = true;
        found = true;
      }
    if (!found)
      fail(ErrorKind::UnknownComponent, "no component contains vertex " + name);
  }
  std::set<std::string> kept;
  for (std::size_t i = 0; i < components.size(); ++i)
    if (keep[i]) kept.insert(components[i].begin(), components[i].end());

  ValuedQuiver vq;
  for (const std::string& v : tq.base.quiver.vertices)
    if (kept.count(v)) vq.quiver.vertices.push_back(v);
  for (const Arrow& a : tq.base.quiver.arrows)
    if (kept.count(a.src) && kept.count(a.dst)) {
      vq.quiver.arrows.push_back(a);
      vq.valuation[a.id] = tq.base.valuation_of(a.id);
    }
  std::map<std::string, std::string> tau;
  for (const std::string& v : vq.quiver.vertices) tau[v] = tq.tau_of(v);
  return build_translation_quiver(vq, tau);
}

}  // namespace arsob
