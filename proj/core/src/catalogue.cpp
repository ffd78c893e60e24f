#include "arsobstruct/catalogue.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "arsobstruct/mesh.hpp"

namespace arsob {

namespace {

using ordered_json = nlohmann::ordered_json;

void add_arrow(ValuedQuiver& q, const std::string& src, const std::string& dst) {
  q.quiver.arrows.push_back({src + "_" + dst, src, dst});
  q.valuation[src + "_" + dst] = 1;
}

ValuedTranslationQuiver finish(ValuedQuiver q, std::map<std::string, std::string> tau) {
  for (const std::string& v : q.quiver.vertices)
    if (!tau.count(v)) tau[v] = v;
  return build_translation_quiver(q, tau);
}

// two vertices exchanging arrows, identity translation (type A_1)
ValuedTranslationQuiver build_a1() {
  ValuedQuiver q;
  q.quiver.vertices = {"x", "y"};
  add_arrow(q, "x", "y");
  add_arrow(q, "y", "x");
  return finish(q, {});
}

// chain v1 <-> ... <-> vm with a loop at vm, identity translation (A_{2m})
ValuedTranslationQuiver build_a_even(int m) {
  ValuedQuiver q;
  for (int k = 1; k <= m; ++k) q.quiver.vertices.push_back("v" + std::to_string(k));
  for (int k = 1; k < m; ++k) {
    add_arrow(q, "v" + std::to_string(k), "v" + std::to_string(k + 1));
    add_arrow(q, "v" + std::to_string(k + 1), "v" + std::to_string(k));
  }
  std::string last = "v" + std::to_string(m);
  q.quiver.arrows.push_back({"loop", last, last});
  q.valuation["loop"] = 1;
  return finish(q, {});
}

// chain v1 <-> ... <-> vm with two exchanged wing vertices p, q at vm
// (A_{2m+1}; the translation swaps the wings)
ValuedTranslationQuiver build_a_odd(int m) {
  ValuedQuiver q;
  for (int k = 1; k <= m; ++k) q.quiver.vertices.push_back("v" + std::to_string(k));
  q.quiver.vertices.push_back("p");
  q.quiver.vertices.push_back("q");
  for (int k = 1; k < m; ++k) {
    add_arrow(q, "v" + std::to_string(k), "v" + std::to_string(k + 1));
    add_arrow(q, "v" + std::to_string(k + 1), "v" + std::to_string(k));
  }
  std::string last = "v" + std::to_string(m);
  add_arrow(q, last, "p");
  add_arrow(q, "p", last);
  add_arrow(q, last, "q");
  add_arrow(q, "q", last);
  return finish(q, {{"p", "q"}, {"q", "p"}});
}

// crossed chain of translation pairs {a_k, b_k}: forward arrows along each
// strand, cross-back arrows a_{k+1} -> b_k, b_{k+1} -> a_k; the translation
// swaps the strands (types D_{2m} and E_7/E_8 strands)
ValuedTranslationQuiver build_crossed_chain(const std::vector<std::pair<std::string, std::string>>& pairs) {
  ValuedQuiver q;
  std::map<std::string, std::string> tau;
  for (const auto& [a, b] : pairs) {
    q.quiver.vertices.push_back(a);
    q.quiver.vertices.push_back(b);
    tau[a] = b;
    tau[b] = a;
  }
  for (std::size_t k = 0; k + 1 < pairs.size(); ++k) {
    add_arrow(q, pairs[k].first, pairs[k + 1].first);
    add_arrow(q, pairs[k].second, pairs[k + 1].second);
    add_arrow(q, pairs[k + 1].first, pairs[k].second);
    add_arrow(q, pairs[k + 1].second, pairs[k].first);
  }
  return finish(q, tau);
}

std::vector<std::pair<std::string, std::string>> numbered_pairs(int first, int count) {
  std::vector<std::pair<std::string, std::string>> out;
  for (int k = 0; k < count; ++k)
    out.push_back({std::to_string(first + 2 * k), std::to_string(first + 2 * k + 1)});
  return out;
}

// star: center c with 2m-2 exchanged pairs (0,1),(2,3),...,(4m-6,4m-5) and
// two exchanged wings p, q (type D_{2m+1}, m >= 2)
ValuedTranslationQuiver build_d_odd(int m) {
  ValuedQuiver q;
  std::map<std::string, std::string> tau;
  q.quiver.vertices.push_back("c");
  for (int k = 0; k < 2 * m - 2; ++k) {
    std::string a = std::to_string(2 * k);
    std::string b = std::to_string(2 * k + 1);
    q.quiver.vertices.push_back(a);
    q.quiver.vertices.push_back(b);
    tau[a] = b;
    tau[b] = a;
    add_arrow(q, a, "c");
    add_arrow(q, b, "c");
    add_arrow(q, "c", a);
    add_arrow(q, "c", b);
  }
  q.quiver.vertices.push_back("p");
  q.quiver.vertices.push_back("q");
  add_arrow(q, "c", "p");
  add_arrow(q, "p", "c");
  add_arrow(q, "c", "q");
  add_arrow(q, "q", "c");
  tau["p"] = "q";
  tau["q"] = "p";
  return finish(q, tau);
}

ValuedTranslationQuiver build_e6() {
  ValuedQuiver q;
  q.quiver.vertices = {"1", "2", "3", "4", "5", "6"};
  add_arrow(q, "1", "6");
  add_arrow(q, "2", "6");
  add_arrow(q, "6", "1");
  add_arrow(q, "6", "2");
  add_arrow(q, "6", "4");
  add_arrow(q, "4", "6");
  add_arrow(q, "3", "4");
  add_arrow(q, "4", "3");
  add_arrow(q, "4", "5");
  add_arrow(q, "5", "4");
  return finish(q, {{"1", "2"}, {"2", "1"}, {"3", "5"}, {"5", "3"}});
}

void range_check(const ADEType& t) {
  bool ok = true;
  switch (t.family) {
    case ADEFamily::A: ok = t.index >= 1 && t.index <= kMaxAIndex; break;
    case ADEFamily::D: ok = t.index >= 4 && t.index <= kMaxDIndex; break;
    case ADEFamily::E: ok = t.index >= 6 && t.index <= 8; break;
  }
  if (!ok) fail(ErrorKind::OutOfCatalogue, t.name() + " is outside the shipped catalogue");
}

}  // namespace

std::string ADEType::name() const {
  const char* fam = family == ADEFamily::A ? "A" : family == ADEFamily::D ? "D" : "E";
  return fam + std::to_string(index);
}

ADEType parse_ade(const std::string& text) {
  std::string s = text;
  s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
  if (s.size() < 2) fail(ErrorKind::InvalidInput, "cannot parse singularity type: " + text);
  ADEFamily fam;
  switch (s[0]) {
    case 'A': fam = ADEFamily::A; break;
    case 'D': fam = ADEFamily::D; break;
    case 'E': fam = ADEFamily::E; break;
    default: fail(ErrorKind::InvalidInput, "unknown family in type: " + text);
  }
  int index = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      fail(ErrorKind::InvalidInput, "bad index in type: " + text);
    index = index * 10 + (s[i] - '0');
  }
  ADEType t{fam, index};
  if ((fam == ADEFamily::A && index < 1) || (fam == ADEFamily::D && index < 4) ||
      (fam == ADEFamily::E && (index < 6 || index > 8)))
    fail(ErrorKind::InvalidInput, "index out of range for family: " + text);
  return t;
}

ADEDescriptor knoerrer_normalize(const ADEType& type, int dim) {
  if (dim < 1) fail(ErrorKind::InvalidInput, "dimension must be at least 1");
  if (dim % 2 == 0)
    fail(ErrorKind::EvenDimension,
         "dimension " + std::to_string(dim) + " is even; the results cover odd dimensions only");
  return {type, 1};
}

CatalogueEntry build_entry(const ADEType& type) {
  range_check(type);
  CatalogueEntry e;
  e.type = type;
  switch (type.family) {
    case ADEFamily::A:
      if (type.index == 1)
        e.ar_quiver = build_a1();
      else if (type.index % 2 == 0)
        e.ar_quiver = build_a_even(type.index / 2);
      else
        e.ar_quiver = build_a_odd(type.index / 2);
      break;
    case ADEFamily::D:
      if (type.index % 2 == 0)
        e.ar_quiver = build_crossed_chain(numbered_pairs(1, type.index - 1));
      else
        e.ar_quiver = build_d_odd(type.index / 2);
      break;
    case ADEFamily::E:
      if (type.index == 6)
        e.ar_quiver = build_e6();
      else if (type.index == 7)
        e.ar_quiver = build_crossed_chain(numbered_pairs(3, 6));
      else
        e.ar_quiver = build_crossed_chain(numbered_pairs(1, 7));
      break;
  }
  e.has_loop = !detect_loops(e.ar_quiver.base.quiver).empty();
  e.indecomposable_count = static_cast<int>(e.ar_quiver.base.quiver.vertices.size());
  e.in_frakS = (type.family == ADEFamily::A && type.index % 2 == 1) ||
               (type.family == ADEFamily::D && type.index % 2 == 0);
  e.citations.push_back("AR-quiver per the known classification of simple hypersurface "
                        "singularities in dimension one (cf. Cor 6.16 proof)");
  if (e.in_frakS)
    e.citations.push_back("small resolution in dimension three: BIKR Thm 5.7 / 6.2(a)");
  if (e.has_loop) e.citations.push_back("loop at the branch vertex: Eq. (2.6) / Thm B.6");
  return e;
}

std::vector<ADEType> shipped_types() {
  std::vector<ADEType> out;
  for (int n = 1; n <= kMaxAIndex; ++n) out.push_back({ADEFamily::A, n});
  for (int n = 4; n <= kMaxDIndex; ++n) out.push_back({ADEFamily::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({ADEFamily::E, n});
  return out;
}

std::string serialize_entry_metadata(const CatalogueEntry& e) {
  ordered_json j;
  j["type"] = e.type.name();
  j["has_loop"] = e.has_loop;
  j["indecomposable_count"] = e.indecomposable_count;
  j["in_frakS"] = e.in_frakS;
  j["citations"] = e.citations;
  return j.dump(2) + "\n";
}

std::string Catalogue::default_path() {
  if (const char* env = std::getenv("ARSOBSTRUCT_CATALOGUE")) return env;
  return ARSOB_BUNDLED_CATALOGUE;
}

Catalogue Catalogue::load(const std::string& dir) {
  namespace fs = std::filesystem;
  Catalogue c;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.path().extension() == ".tq") files.push_back(entry.path());
  if (ec || files.empty())
    fail(ErrorKind::CatalogueLoadError, "no catalogue entries found in " + dir);
  std::sort(files.begin(), files.end());
  for (const fs::path& tq_path : files) {
    fs::path meta_path = tq_path;
    meta_path.replace_extension(".json");
    std::ifstream tq_in(tq_path), meta_in(meta_path);
    if (!tq_in || !meta_in)
      fail(ErrorKind::CatalogueLoadError, "cannot read entry files for " + tq_path.string());
    std::ostringstream tq_buf;
    tq_buf << tq_in.rdbuf();
    CatalogueEntry e;
    try {
      e.ar_quiver = parse_translation_quiver(tq_buf.str());
      ordered_json j = ordered_json::parse(meta_in);
      e.type = parse_ade(j.at("type").get<std::string>());
      e.has_loop = j.at("has_loop").get<bool>();
      e.indecomposable_count = j.at("indecomposable_count").get<int>();
      e.in_frakS = j.at("in_frakS").get<bool>();
      for (const auto& cite : j.at("citations")) e.citations.push_back(cite.get<std::string>());
    } catch (const Error&) {
      throw;
    } catch (const std::exception& ex) {
      fail(ErrorKind::CatalogueLoadError,
           "malformed catalogue entry " + tq_path.string() + ": " + ex.what());
    }
    c.entries_.push_back(std::move(e));
  }
  return c;
}

const CatalogueEntry& Catalogue::get(const ADEType& type) const {
  for (const CatalogueEntry& e : entries_)
    if (e.type == type) return e;
  fail(ErrorKind::OutOfCatalogue, type.name() + " is not in the loaded catalogue");
}

std::vector<ADEType> Catalogue::types() const {
  std::vector<ADEType> out;
  for (const CatalogueEntry& e : entries_) out.push_back(e.type);
  return out;
}

ValidationReport validate_catalogue(const Catalogue& c) {
  ValidationReport report;
  for (const ADEType& type : c.types()) {
    const CatalogueEntry& e = c.get(type);
    std::vector<ValidationIssue> issues;
    auto check = [&](const std::string& name, auto&& fn) {
      try {
        fn();
      } catch (const Error& err) {
        issues.push_back({type.name(), name, err.what()});
      }
    };
    check("axioms", [&] {
      build_translation_quiver(e.ar_quiver.base, e.ar_quiver.tau);
    });
    check("valuations", [&] {
      for (const auto& [id, val] : e.ar_quiver.base.valuation)
        if (val != 1) fail(ErrorKind::ValuationMismatch, "valuation of " + id + " is not 1");
    });
    check("loop flag", [&] {
      bool found = !detect_loops(e.ar_quiver.base.quiver).empty();
      bool expected = type.family == ADEFamily::A && type.index % 2 == 0;
      if (found != e.has_loop || found != expected)
        fail(ErrorKind::AxiomViolation, "loop flag disagrees with the quiver");
    });
    check("connectivity", [&] {
      if (connected_components(e.ar_quiver.base.quiver).size() != 1)
        fail(ErrorKind::AxiomViolation, "AR-quiver is not connected");
    });
    check("counts", [&] {
      if (e.indecomposable_count !=
          static_cast<int>(e.ar_quiver.base.quiver.vertices.size()))
        fail(ErrorKind::AxiomViolation, "indecomposable count disagrees with vertex count");
    });
    check("region flag", [&] {
      bool expected = (type.family == ADEFamily::A && type.index % 2 == 1) ||
                      (type.family == ADEFamily::D && type.index % 2 == 0);
      if (e.in_frakS != expected)
        fail(ErrorKind::AxiomViolation, "small-resolution region flag is wrong");
    });
    check("builder agreement", [&] {
      if (!quiver_isomorphic(e.ar_quiver, build_entry(type).ar_quiver))
        fail(ErrorKind::AxiomViolation, "entry differs from the generated reference");
    });
    bool reducible = (type.family == ADEFamily::D && type.index % 2 == 1) ||
                     type.family == ADEFamily::E;
    if (reducible)
      check("reduction", [&] { reduce_ade(c, type); });
    if (issues.empty())
      report.passed.push_back(type.name());
    else
      report.failures.insert(report.failures.end(), issues.begin(), issues.end());
  }
  return report;
}

}  // namespace arsob
