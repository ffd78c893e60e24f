#include <doctest.h>

#include "arsobstruct/quiver.hpp"

using namespace arsob;

namespace {

ValuedQuiver two_cycle() {
  ValuedQuiver vq;
  vq.quiver.vertices = {"x", "y"};
  vq.quiver.arrows = {{"a", "x", "y"}, {"b", "y", "x"}};
  vq.valuation = {{"a", 1}, {"b", 1}};
  return vq;
}

std::map<std::string, std::string> identity_tau(const ValuedQuiver& vq) {
  std::map<std::string, std::string> tau;
  for (const auto& v : vq.quiver.vertices) tau[v] = v;
  return tau;
}

}  // namespace

TEST_CASE("build_translation_quiver accepts the 2-cycle with identity tau") {
  ValuedQuiver vq = two_cycle();
  ValuedTranslationQuiver tq = build_translation_quiver(vq, identity_tau(vq));
  // sigma swaps the two arrows
  CHECK(tq.polarisation.at("a") == "b");
  CHECK(tq.polarisation.at("b") == "a");
}

TEST_CASE("build_translation_quiver rejects a one-way arrow with identity tau") {
  ValuedQuiver vq;
  vq.quiver.vertices = {"x", "y"};
  vq.quiver.arrows = {{"a", "x", "y"}};
  vq.valuation = {{"a", 1}};
  CHECK_THROWS_WITH_AS(build_translation_quiver(vq, identity_tau(vq)),
                       doctest::Contains("(tau x)^+ != x^-"), Error);
}

TEST_CASE("build_translation_quiver rejects non-bijective tau") {
  ValuedQuiver vq = two_cycle();
  std::map<std::string, std::string> tau{{"x", "x"}, {"y", "x"}};
  CHECK_THROWS_AS(build_translation_quiver(vq, tau), Error);
}

TEST_CASE("double arrows are rejected in valued quivers") {
  ValuedQuiver vq;
  vq.quiver.vertices = {"x", "y"};
  vq.quiver.arrows = {{"a", "x", "y"}, {"a2", "x", "y"}};
  vq.valuation = {{"a", 1}, {"a2", 1}};
  CHECK_THROWS_AS(build_translation_quiver(vq, identity_tau(vq)), Error);
}

TEST_CASE("valuation axiom a(sigma alpha) = a(alpha) is enforced") {
  ValuedQuiver vq = two_cycle();
  vq.valuation["a"] = 2;  // sigma(a) = b has valuation 1
  CHECK_THROWS_AS(build_translation_quiver(vq, identity_tau(vq)), Error);
}

TEST_CASE("loop and 2-cycle detection") {
  Quiver q;
  q.vertices = {"u", "v", "w"};
  q.arrows = {{"l", "u", "u"}, {"p", "v", "w"}, {"q", "w", "v"}};
  CHECK(detect_loops(q) == std::set<std::string>{"u"});
  CHECK(detect_two_cycles(q) ==
        std::set<std::pair<std::string, std::string>>{{"v", "w"}});

  Quiver loop_only;
  loop_only.vertices = {"u"};
  loop_only.arrows = {{"l", "u", "u"}};
  CHECK(detect_two_cycles(loop_only).empty());
}

TEST_CASE("remove_tau_orbits: empty removal is the identity") {
  ValuedQuiver vq = two_cycle();
  ValuedTranslationQuiver tq = build_translation_quiver(vq, identity_tau(vq));
  ValuedTranslationQuiver same = remove_tau_orbits(tq, {});
  CHECK(same.base.quiver.vertices == tq.base.quiver.vertices);
  CHECK(same.base.quiver.arrows.size() == tq.base.quiver.arrows.size());
}

TEST_CASE("remove_tau_orbits rejects orbits not closed under tau") {
  // 3 vertices: c <-> p, c <-> q, tau swaps p and q
  ValuedQuiver vq;
  vq.quiver.vertices = {"c", "p", "q"};
  vq.quiver.arrows = {{"cp", "c", "p"}, {"pc", "p", "c"}, {"cq", "c", "q"}, {"qc", "q", "c"}};
  for (const auto& a : vq.quiver.arrows) vq.valuation[a.id] = 1;
  std::map<std::string, std::string> tau{{"c", "c"}, {"p", "q"}, {"q", "p"}};
  ValuedTranslationQuiver tq = build_translation_quiver(vq, tau);
  CHECK_THROWS_AS(remove_tau_orbits(tq, {{"p"}}), Error);
  // the full orbit {p,q} is fine and leaves the single vertex c
  ValuedTranslationQuiver reduced = remove_tau_orbits(tq, {{"p", "q"}});
  CHECK(reduced.base.quiver.vertices == std::vector<std::string>{"c"});
  CHECK(reduced.base.quiver.arrows.empty());
}

TEST_CASE("remove_tau_orbits order independence") {
  // chain of two 2-cycles: x <-> y <-> z, tau = id
  ValuedQuiver vq;
  vq.quiver.vertices = {"x", "y", "z"};
  vq.quiver.arrows = {{"xy", "x", "y"}, {"yx", "y", "x"}, {"yz", "y", "z"}, {"zy", "z", "y"}};
  for (const auto& a : vq.quiver.arrows) vq.valuation[a.id] = 1;
  ValuedTranslationQuiver tq = build_translation_quiver(vq, identity_tau(vq));
  ValuedTranslationQuiver both = remove_tau_orbits(tq, {{"x"}, {"z"}});
  ValuedTranslationQuiver seq =
      remove_tau_orbits(remove_tau_orbits(tq, {{"x"}}), {{"z"}});
  CHECK(serialize_translation_quiver(both) == serialize_translation_quiver(seq));
}

TEST_CASE("connected components") {
  Quiver q;
  CHECK(connected_components(q).empty());

  q.vertices = {"a", "b", "c", "d"};
  q.arrows = {{"ab", "a", "b"}, {"ba", "b", "a"}, {"cd", "c", "d"}, {"dc", "d", "c"}};
  auto comps = connected_components(q);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<std::string>{"a", "b"});
  CHECK(comps[1] == std::vector<std::string>{"c", "d"});
}

TEST_CASE("quiver isomorphism: reflexive, vertex-count mismatch, relabelling") {
  ValuedQuiver vq = two_cycle();
  ValuedTranslationQuiver tq = build_translation_quiver(vq, identity_tau(vq));
  auto self = quiver_isomorphic(tq, tq);
  REQUIRE(self.has_value());
  CHECK(self->at("x") == "x");

  ValuedQuiver other;
  other.quiver.vertices = {"u", "v"};
  other.quiver.arrows = {{"f", "u", "v"}, {"g", "v", "u"}};
  other.valuation = {{"f", 1}, {"g", 1}};
  ValuedTranslationQuiver tq2 = build_translation_quiver(other, identity_tau(other));
  auto found = quiver_isomorphic(tq, tq2);
  REQUIRE(found.has_value());
  // mapping preserves arrows both ways
  CHECK(found->size() == 2);

  ValuedQuiver single;
  single.quiver.vertices = {"x"};
  ValuedTranslationQuiver tq3 =
      build_translation_quiver(single, {{"x", "x"}});
  CHECK_FALSE(quiver_isomorphic(tq, tq3).has_value());
}

TEST_CASE("isomorphism distinguishes tau structure") {
  // same underlying quiver (4-cycle of 2-cycles? keep simple): two 2-cycles
  // with tau = id versus tau = swap is invalid to build for the swap case on
  // this shape, so compare loop placement instead
  ValuedQuiver with_loop;
  with_loop.quiver.vertices = {"x", "y"};
  with_loop.quiver.arrows = {{"a", "x", "y"}, {"b", "y", "x"}, {"l", "x", "x"}};
  with_loop.valuation = {{"a", 1}, {"b", 1}, {"l", 1}};
  ValuedTranslationQuiver tq_loop = build_translation_quiver(with_loop, identity_tau(with_loop));
  ValuedQuiver plain = two_cycle();
  ValuedTranslationQuiver tq_plain = build_translation_quiver(plain, identity_tau(plain));
  CHECK_FALSE(quiver_isomorphic(tq_loop, tq_plain).has_value());
}

TEST_CASE("text format round trip and DOT export") {
  std::string text =
      "# A_3 shape\n"
      "vertex c p q\n"
      "arrow cp c p\n"
      "arrow pc p c\n"
      "arrow cq c q\n"
      "arrow qc q c\n"
      "tau c c\n"
      "tau p q\n"
      "tau q p\n";
  ValuedTranslationQuiver tq = parse_translation_quiver(text);
  std::string ser = serialize_translation_quiver(tq);
  ValuedTranslationQuiver back = parse_translation_quiver(ser);
  CHECK(serialize_translation_quiver(back) == ser);

  std::string dot = export_dot(tq);
  CHECK(dot.find("\"c\" -> \"p\"") != std::string::npos);
  CHECK(dot.find("[style=dashed]") != std::string::npos);

  Quiver empty;
  CHECK(export_dot(empty) == "digraph {\n}\n");
}

TEST_CASE("axiom restated on raw data: sources into x = targets out of tau x") {
  std::string text =
      "vertex 1 2\n"
      "arrow a 1 2\n"
      "arrow b 2 1\n"
      "tau 1 1\n"
      "tau 2 2\n";
  ValuedTranslationQuiver tq = parse_translation_quiver(text);
  for (const auto& x : tq.base.quiver.vertices) {
    CHECK(tq.base.quiver.predecessors(x) ==
          tq.base.quiver.successors(tq.tau_of(x)));
  }
}
