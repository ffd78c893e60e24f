#include <doctest.h>

#include <algorithm>
#include <set>

#include "arsobstruct/algebra.hpp"
#include "test_support.hpp"

using namespace arsob;
using arsob::test::load_presentation;

namespace {

// Independent oracle for monomial presentations: enumerate composable paths
// up to `max_len` whose arrow words avoid every relation word as a subword.
// Valid whenever all relations are single monomial paths.
std::vector<std::vector<std::string>> monomial_basis_oracle(
    const AlgebraPresentation& p, std::size_t max_len) {
  std::vector<std::vector<std::string>> words;
  std::map<std::string, std::pair<std::string, std::string>> ends;
  for (const Arrow& a : p.quiver.arrows) ends[a.id] = {a.src, a.dst};
  std::vector<std::vector<std::string>> forbidden;
  for (const Relation& r : p.relations) {
    REQUIRE(r.terms.size() == 1);
    forbidden.push_back(r.terms[0].arrows);
  }
  auto avoids = [&](const std::vector<std::string>& w) {
    for (const auto& f : forbidden) {
      if (f.size() > w.size()) continue;
      for (std::size_t pos = 0; pos + f.size() <= w.size(); ++pos)
        if (std::equal(f.begin(), f.end(), w.begin() + pos)) return false;
    }
    return true;
  };
  // empty words, one per vertex
  for (const auto& v : p.quiver.vertices) words.push_back({});
  std::vector<std::pair<std::vector<std::string>, std::string>> frontier;
  for (const auto& v : p.quiver.vertices) frontier.push_back({{}, v});
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::pair<std::vector<std::string>, std::string>> next;
    for (const auto& [w, dst] : frontier)
      for (const Arrow& a : p.quiver.arrows) {
        if (a.src != dst) continue;
        auto nw = w;
        nw.push_back(a.id);
        if (avoids(nw)) next.push_back({nw, a.dst});
      }
    for (const auto& [w, dst] : next) words.push_back(w);
    frontier = std::move(next);
  }
  return words;
}

}  // namespace

TEST_CASE("kA_2: dimension 3, nilpotency 2") {
  AlgebraInstance a = instantiate(load_presentation("ka2.alg"));
  CHECK(a.dimension() == 3);
  CHECK(a.nilpotency() == 2);
}

TEST_CASE("dual numbers: dimension 2, x*x = 0") {
  AlgebraInstance a = instantiate(load_presentation("dual_numbers.alg"));
  CHECK(a.dimension() == 2);
  CHECK(a.nilpotency() == 2);
  int xi = -1;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    if (a.basis_path(i).length() == 1) xi = static_cast<int>(i);
  REQUIRE(xi >= 0);
  Vec prod = a.multiply_basis(xi, xi);
  CHECK(std::all_of(prod.begin(), prod.end(), [](const Rational& c) { return c == 0; }));
}

TEST_CASE("gentle algebra goldens against the path-enumeration oracle") {
  AlgebraPresentation p = load_presentation("gentle_two_nodes.alg");
  AlgebraInstance a = instantiate(p);

  auto oracle = monomial_basis_oracle(p, 3);
  CHECK(a.dimension() == oracle.size());
  CHECK(a.dimension() == 9);
  CHECK(a.nilpotency() == 3);

  // radical dims from oracle word lengths: [9, 6, 2, 0]
  std::vector<std::size_t> expected{oracle.size(), 0, 0, 0};
  for (const auto& w : oracle) {
    if (w.size() >= 1) ++expected[1];
    if (w.size() >= 2) ++expected[2];
  }
  CHECK(radical_power_dims(a) == expected);
  CHECK(radical_power_dims(a) == std::vector<std::size_t>{9, 6, 2, 0});
}

TEST_CASE("gentle multiplication: a1*b1 = 0 and a1*a2 survives") {
  AlgebraInstance a = instantiate(load_presentation("gentle_two_nodes.alg"));
  auto idx_of = [&](std::vector<std::string> names) {
    std::vector<int> arrows;
    for (const auto& n : names) arrows.push_back(a.arrow_index(n));
    for (std::size_t i = 0; i < a.dimension(); ++i)
      if (a.basis_path(i).arrows == arrows) return static_cast<int>(i);
    return -1;
  };
  int a1 = idx_of({"a1"}), b1 = idx_of({"b1"}), a2 = idx_of({"a2"});
  REQUIRE(a1 >= 0); REQUIRE(b1 >= 0); REQUIRE(a2 >= 0);
  Vec zero = a.multiply_basis(a1, b1);
  CHECK(std::all_of(zero.begin(), zero.end(), [](const Rational& c) { return c == 0; }));
  int a1a2 = idx_of({"a1", "a2"});
  REQUIRE(a1a2 >= 0);
  Vec p = a.multiply_basis(a1, a2);
  CHECK(p[a1a2] == 1);
}

TEST_CASE("idempotents multiply correctly") {
  AlgebraInstance a = instantiate(load_presentation("gentle_two_nodes.alg"));
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    std::size_t e = a.idempotent_index(static_cast<int>(v));
    Vec p = a.multiply_basis(e, e);
    CHECK(p[e] == 1);
  }
  // orthogonality
  Vec p = a.multiply_basis(a.idempotent_index(0), a.idempotent_index(1));
  CHECK(std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; }));
}

TEST_CASE("multiplication associativity on all basis triples (dim <= 64)") {
  for (const char* name : {"gentle_two_nodes.alg", "loop_cubed.alg", "commutative_square.alg"}) {
    AlgebraInstance a = instantiate(load_presentation(name));
    REQUIRE(a.dimension() <= 64);
    for (std::size_t i = 0; i < a.dimension(); ++i)
      for (std::size_t j = 0; j < a.dimension(); ++j) {
        Vec ij = a.multiply_basis(i, j);
        for (std::size_t k = 0; k < a.dimension(); ++k) {
          Vec left = a.multiply(ij, a.basis_element(k));
          Vec right = a.multiply(a.basis_element(i), a.multiply_basis(j, k));
          CHECK(left == right);
        }
      }
  }
}

TEST_CASE("Gabriel quiver recovery on the corpus") {
  for (const char* name :
       {"gentle_two_nodes.alg", "ka2.alg", "ka3_linear.alg", "kronecker.alg",
        "dual_numbers.alg", "loop_cubed.alg", "nakayama_cycle3.alg",
        "commutative_square.alg", "semisimple_two.alg", "two_cycle_radsq.alg"}) {
    AlgebraPresentation p = load_presentation(name);
    AlgebraInstance a = instantiate(p);
    ValuedQuiver recovered = quiver_of_algebra(a);
    // arrow-count matrix of the presentation
    std::map<std::pair<std::string, std::string>, int> expect, got;
    for (const Arrow& ar : p.quiver.arrows) expect[{ar.src, ar.dst}] += 1;
    for (const Arrow& ar : recovered.quiver.arrows)
      got[{ar.src, ar.dst}] += recovered.valuation_of(ar.id);
    CHECK_MESSAGE(expect == got, name);
  }
}

TEST_CASE("instantiate is order independent in dimension") {
  // reverse the relation list and the arrow list of the gentle presentation
  AlgebraPresentation p = load_presentation("gentle_two_nodes.alg");
  AlgebraPresentation q = p;
  std::reverse(q.relations.begin(), q.relations.end());
  std::reverse(q.quiver.arrows.begin(), q.quiver.arrows.end());
  AlgebraInstance a = instantiate(p), b = instantiate(q);
  CHECK(a.dimension() == b.dimension());
  CHECK(radical_power_dims(a) == radical_power_dims(b));
}

TEST_CASE("dimensions agree over Q and F_p on the corpus") {
  for (const char* name :
       {"gentle_two_nodes.alg", "ka3_linear.alg", "nakayama_cycle3.alg",
        "commutative_square.alg"}) {
    AlgebraPresentation p = load_presentation(name);
    AlgebraInstance over_q = instantiate(p);
    for (std::uint32_t ch : {2u, 3u, 5u}) {
      p.field = Field::prime(ch);
      AlgebraInstance over_fp = instantiate(p);
      CHECK(over_q.dimension() == over_fp.dimension());
      CHECK(radical_power_dims(over_q) == radical_power_dims(over_fp));
    }
  }
}

TEST_CASE("non-admissible presentations fail loudly") {
  // a loop with no relation is infinite dimensional
  AlgebraPresentation p;
  p.quiver.vertices = {"1"};
  p.quiver.arrows = {{"x", "1", "1"}};
  CHECK_THROWS_AS(instantiate(p, 8), Error);
}

TEST_CASE("parser error taxonomy") {
  CHECK_THROWS_AS(parse_presentation("field Q\nvertex 1\narrow x 1 1\nrelation x\n"), Error);
  CHECK_THROWS_AS(parse_presentation("field Q\nvertex 1\narrow x 1 1\nrelation c9*c9\n"), Error);
  CHECK_THROWS_AS(
      parse_presentation("field Q\nvertex 1 2 3\narrow a 1 2\narrow b 1 3\nrelation a*b\n"),
      Error);
  // mixed endpoints
  CHECK_THROWS_AS(parse_presentation("field Q\nvertex 1 2 3\narrow a 1 2\narrow b 2 3\n"
                                     "arrow l 1 1\nrelation a*b + l*l\n"),
                  Error);
  // field mismatch: denominator divisible by characteristic
  AlgebraPresentation p =
      parse_presentation("field F 2\nvertex 1\narrow x 1 1\nrelation x*x + 1/2 x*x*x\n");
  CHECK_THROWS_AS(instantiate(p), Error);
}

TEST_CASE("length filtration equals radical filtration on graded corpus") {
  for (const char* name : {"gentle_two_nodes.alg", "nakayama_cycle3.alg", "loop_cubed.alg"}) {
    AlgebraInstance a = instantiate(load_presentation(name));
    auto dims = radical_power_dims(a);
    for (std::size_t k = 0; k < dims.size(); ++k) {
      std::size_t count = 0;
      for (std::size_t i = 0; i < a.dimension(); ++i)
        if (a.basis_path(i).length() >= k) ++count;
      CHECK(dims[k] == count);
    }
  }
}

TEST_CASE("opposite presentation instantiates with the same dimensions") {
  AlgebraPresentation p = load_presentation("gentle_two_nodes.alg");
  AlgebraInstance a = instantiate(p);
  AlgebraInstance op = instantiate(opposite_presentation(p));
  CHECK(a.dimension() == op.dimension());
  CHECK(radical_power_dims(a) == radical_power_dims(op));
}
