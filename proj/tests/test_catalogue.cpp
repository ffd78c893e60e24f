#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "arsobstruct/catalogue.hpp"
#include "arsobstruct/mesh.hpp"
#include "test_support.hpp"

using namespace arsob;

namespace {

const Catalogue& shipped() {
  static Catalogue c = Catalogue::load(Catalogue::default_path());
  return c;
}

}  // namespace

TEST_CASE("type parsing and ranges") {
  CHECK(parse_ade("A3").name() == "A3");
  CHECK(parse_ade("D_5").name() == "D5");
  CHECK(parse_ade("E8").family == ADEFamily::E);
  CHECK_THROWS_AS(parse_ade("E9"), Error);
  CHECK_THROWS_AS(parse_ade("D3"), Error);
  CHECK_THROWS_AS(parse_ade("A0"), Error);
  CHECK_THROWS_AS(parse_ade("X2"), Error);
  CHECK_THROWS_AS(parse_ade("A"), Error);
}

TEST_CASE("dimension normalization collapses odd dimensions and rejects even ones") {
  ADEDescriptor d = knoerrer_normalize(parse_ade("A3"), 5);
  CHECK(d.type.name() == "A3");
  CHECK(d.dim == 1);
  CHECK(knoerrer_normalize(parse_ade("A1"), 1).dim == 1);
  CHECK_THROWS_AS(knoerrer_normalize(parse_ade("D4"), 4), Error);
  CHECK_THROWS_AS(knoerrer_normalize(parse_ade("A1"), 0), Error);
  try {
    knoerrer_normalize(parse_ade("D4"), 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EvenDimension);
  }
}

TEST_CASE("the shipped catalogue loads completely") {
  CHECK(shipped().types().size() == 81);  // A1..A40, D4..D41, E6..E8
}

TEST_CASE("structural facts of named entries") {
  CHECK_FALSE(shipped().get(parse_ade("A1")).has_loop);
  CHECK(shipped().get(parse_ade("A1")).in_frakS);
  CHECK(shipped().get(parse_ade("A2")).has_loop);
  for (int m = 1; m <= 5; ++m)
    CHECK(shipped().get({ADEFamily::A, 2 * m}).has_loop);
  CHECK(shipped().get(parse_ade("D4")).in_frakS);
  CHECK_FALSE(shipped().get(parse_ade("D5")).in_frakS);
  CHECK_FALSE(shipped().get(parse_ade("E6")).in_frakS);
  // D_5 carries the orbit labels (0,1), (2,3)
  const Quiver& d5 = shipped().get(parse_ade("D5")).ar_quiver.base.quiver;
  for (const char* v : {"0", "1", "2", "3", "c", "p", "q"}) CHECK(d5.has_vertex(v));
  CHECK_THROWS_AS(shipped().get(parse_ade("A41")), Error);
}

TEST_CASE("entries are valid connected translation quivers with unit valuations") {
  for (const ADEType& t : shipped().types()) {
    const CatalogueEntry& e = shipped().get(t);
    CHECK_NOTHROW(build_translation_quiver(e.ar_quiver.base, e.ar_quiver.tau));
    for (const auto& [id, val] : e.ar_quiver.base.valuation) CHECK(val == 1);
    CHECK(connected_components(e.ar_quiver.base.quiver).size() == 1);
    CHECK(e.has_loop == !detect_loops(e.ar_quiver.base.quiver).empty());
    CHECK(e.has_loop == (t.family == ADEFamily::A && t.index % 2 == 0));
  }
}

TEST_CASE("full validation report passes") {
  ValidationReport r = validate_catalogue(shipped());
  CHECK(r.ok());
  CHECK(r.passed.size() == 81);
}

TEST_CASE("a corrupted entry is rejected with an axiom violation") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "arsob_corrupt_catalogue";
  fs::create_directories(dir);
  CatalogueEntry e = build_entry(parse_ade("D4"));
  std::string text = serialize_translation_quiver(e.ar_quiver);
  // delete one arrow line
  auto pos = text.find("arrow ");
  auto end = text.find('\n', pos);
  text.erase(pos, end - pos + 1);
  {
    std::ofstream out(dir / "D4.tq");
    out << text;
    std::ofstream meta(dir / "D4.json");
    meta << serialize_entry_metadata(e);
  }
  try {
    Catalogue::load(dir.string());
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::AxiomViolation);
  }
  fs::remove_all(dir);
}

TEST_CASE("catalogue round trip: files equal regenerated serialization") {
  for (const char* name : {"A1", "A2", "A3", "D4", "D5", "E6", "E7", "E8"}) {
    const CatalogueEntry& loaded = shipped().get(parse_ade(name));
    CatalogueEntry built = build_entry(parse_ade(name));
    CHECK(serialize_translation_quiver(loaded.ar_quiver) ==
          serialize_translation_quiver(built.ar_quiver));
    CHECK(loaded.in_frakS == built.in_frakS);
    CHECK(loaded.indecomposable_count == built.indecomposable_count);
  }
}
