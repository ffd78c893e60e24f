#include <doctest.h>

#include <algorithm>

#include "arsobstruct/enumerate.hpp"
#include "test_support.hpp"

using namespace arsob;
using arsob::test::load_presentation;

namespace {

AlgebraInstance load_f2(const std::string& name) {
  AlgebraPresentation p = load_presentation(name);
  p.field = Field::prime(2);
  return instantiate(p);
}

}  // namespace

TEST_CASE("indecomposability scan on known modules") {
  AlgebraInstance a = load_f2("gentle_two_nodes.alg");
  Representation p1 = standard_module(a, StandardKind::projective, "1");
  CHECK(is_indecomposable(p1));
  Representation s1 = standard_module(a, StandardKind::simple, "1");
  Representation s2 = standard_module(a, StandardKind::simple, "2");
  CHECK(is_indecomposable(s1));
  CHECK_FALSE(is_indecomposable(direct_sum(s1, s2)));
  CHECK_FALSE(is_indecomposable(direct_sum(s1, s1)));
}

TEST_CASE("isomorphism search distinguishes simples and finds relabellings") {
  AlgebraInstance a = load_f2("gentle_two_nodes.alg");
  Representation s1 = standard_module(a, StandardKind::simple, "1");
  Representation s2 = standard_module(a, StandardKind::simple, "2");
  CHECK(modules_isomorphic(s1, s1));
  CHECK_FALSE(modules_isomorphic(s1, s2));
  // two presentations of the same 2-dimensional module over k[x]/(x^2)
  AlgebraInstance d = load_f2("dual_numbers.alg");
  Representation u = parse_representation(d, "dims 1=2\nmatrix x\n0 1\n0 0\n");
  Representation v = parse_representation(d, "dims 1=2\nmatrix x\n0 0\n1 0\n");
  CHECK(modules_isomorphic(u, v));
  Representation w = parse_representation(d, "dims 1=2\nmatrix x\n0 0\n0 0\n");
  CHECK_FALSE(modules_isomorphic(u, w));
}

TEST_CASE("enumeration over the semisimple algebra finds only the simples") {
  AlgebraInstance a = load_f2("semisimple_two.alg");
  auto mods = enumerate_indecomposables(a, {1, 1});
  CHECK(mods.size() == 2);
  for (const Representation& m : mods) CHECK(m.total_dim() == 1);
}

TEST_CASE("enumeration over the dual numbers finds S and P") {
  AlgebraInstance a = load_f2("dual_numbers.alg");
  auto mods = enumerate_indecomposables(a, {2});
  REQUIRE(mods.size() == 2);
  CHECK(mods[0].total_dim() == 1);
  CHECK(mods[1].total_dim() == 2);
  CHECK(rank(mods[1].arrow_maps[0], a.field()) == 1);
}

TEST_CASE("enumeration over hereditary A_2 finds its three indecomposables") {
  AlgebraInstance a = load_f2("ka2.alg");
  auto mods = enumerate_indecomposables(a, {2, 2});
  CHECK(mods.size() == 3);
}

TEST_CASE("enumeration over the Kronecker algebra within bound (1,1)") {
  AlgebraInstance a = load_f2("kronecker.alg");
  auto mods = enumerate_indecomposables(a, {1, 1});
  // two simples plus the three regular modules visible over F_2
  CHECK(mods.size() == 5);
}

TEST_CASE("enumeration respects the budget") {
  AlgebraInstance a = load_f2("gentle_two_nodes.alg");
  CHECK_THROWS_AS(enumerate_indecomposables(a, {2, 2, 2}, 100), Error);
}

TEST_CASE("stable GP quiver of the dual numbers is one isolated vertex") {
  AlgebraInstance a = load_f2("dual_numbers.alg");
  StableGpQuiver q = stable_gp_quiver(a, {2});
  CHECK(q.quiver.vertices.size() == 1);
  CHECK(q.quiver.arrows.empty());
  REQUIRE(q.syzygy_pairs.size() == 1);
  CHECK(q.syzygy_pairs[0] == std::pair<int, int>{0, 0});
  CHECK(stable_gp_components(q).size() == 1);
}

TEST_CASE("stable GP quiver of a semisimple algebra is empty") {
  AlgebraInstance a = load_f2("semisimple_two.alg");
  StableGpQuiver q = stable_gp_quiver(a, {1, 1});
  CHECK(q.quiver.vertices.empty());
  CHECK(stable_gp_components(q).empty());
}

TEST_CASE("stable GP category of the gentle algebra splits into two nodes") {
  AlgebraInstance a = load_f2("gentle_two_nodes.alg");
  StableGpQuiver q = stable_gp_quiver(a, {2, 2, 2});
  REQUIRE(q.quiver.vertices.size() == 4);
  // stable radical between distinct cycle ideals vanishes
  CHECK(q.quiver.arrows.empty());
  // the syzygy is a fixed-point-free involution on the four modules
  REQUIRE(q.syzygy_pairs.size() == 4);
  for (const auto& [i, j] : q.syzygy_pairs) CHECK(i != j);
  auto comps = stable_gp_components(q);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 2);
  CHECK(comps[1].size() == 2);
}
