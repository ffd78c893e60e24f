// Command-line frontend: decide obstructions, inspect catalogue quivers,
// run reductions, build mesh algebras, analyze path algebras, and validate
// the bundled catalogue.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arsobstruct/engine.hpp"
#include "arsobstruct/enumerate.hpp"
#include "arsobstruct/mesh.hpp"

namespace {

using namespace arsob;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Catalogue load_catalogue(const std::string& flag) {
  return Catalogue::load(flag.empty() ? Catalogue::default_path() : flag);
}

Field parse_field_flag(const std::string& name) {
  if (name == "Q") return Field::rationals();
  if (name.size() >= 2 && name[0] == 'F') {
    try {
      return Field::prime(static_cast<std::uint32_t>(std::stoul(name.substr(1))));
    } catch (const std::exception&) {
    }
  }
  fail(ErrorKind::InvalidInput, "unknown field '" + name + "' (expected Q or F<p>)");
}

std::vector<std::size_t> parse_bound(const std::string& text) {
  std::vector<std::size_t> bound;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorKind::InvalidInput, "invalid bound entry '" + tok + "'");
    bound.push_back(std::stoul(tok));
  }
  if (bound.empty()) fail(ErrorKind::InvalidInput, "empty dimension bound");
  return bound;
}

int emit_verdict(const Verdict& v, const std::string& format) {
  if (format == "json")
    std::cout << verdict_json(v).dump(2) << "\n";
  else
    std::cout << explain(v);
  return (v.outcome == Outcome::OutOfScope || v.outcome == Outcome::Undetermined) ? 2 : 0;
}

int run(int argc, char** argv) {
  CLI::App app{"obstruction decision procedure for ADE and small-resolution "
               "hypersurface singularity categories"};
  app.require_subcommand(1);
  std::string catalogue_flag;
  app.add_option("--catalogue", catalogue_flag,
                 "catalogue directory (default: ARSOBSTRUCT_CATALOGUE or bundled)");

  // decide
  auto* decide_cmd = app.add_subcommand("decide", "decide obstructions for a singularity");
  std::string ade, branches_file, curves_file, format = "text";
  int dim = 3;
  decide_cmd->add_option("--ade", ade, "ADE type, e.g. A1, D5, E8");
  decide_cmd->add_option("--branches", branches_file, "branch-system file (one poly per line)");
  decide_cmd->add_option("--curves", curves_file, "exceptional-curve configuration file");
  decide_cmd->add_option("--dim", dim, "ambient dimension (ADE inputs)")
      ->check(CLI::Range(1, 1000));
  decide_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // ar show / ar reduce
  auto* ar_cmd = app.add_subcommand("ar", "inspect catalogue AR-quivers");
  ar_cmd->require_subcommand(1);
  auto* show_cmd = ar_cmd->add_subcommand("show", "print a catalogue quiver");
  std::string show_type, show_format = "text";
  show_cmd->add_option("type", show_type)->required();
  show_cmd->add_option("--format", show_format)->check(CLI::IsMember({"text", "dot"}));
  auto* reduce_cmd = ar_cmd->add_subcommand("reduce", "run the orbit-removal reduction");
  std::string reduce_type;
  reduce_cmd->add_option("type", reduce_type)->required();

  // mesh
  auto* mesh_cmd = app.add_subcommand("mesh", "mesh algebra of a translation quiver");
  std::string mesh_file;
  int cutoff = kDefaultLengthCap;
  mesh_cmd->add_option("tqfile", mesh_file)->required();
  mesh_cmd->add_option("--cutoff", cutoff, "path length cap")->check(CLI::Range(1, 4096));

  // algebra info | ext | gp
  auto* alg_cmd = app.add_subcommand("algebra", "analyze a path-algebra presentation");
  alg_cmd->require_subcommand(1);
  auto* info_cmd = alg_cmd->add_subcommand("info", "dimension, radical dims, Gabriel quiver");
  std::string info_file;
  info_cmd->add_option("algfile", info_file)->required();
  auto* ext_cmd = alg_cmd->add_subcommand("ext", "Ext dimension between simples");
  std::string ext_file, simple_i, simple_j;
  int ext_deg = 1;
  ext_cmd->add_option("algfile", ext_file)->required();
  ext_cmd->add_option("--simples", [&](const std::vector<std::string>& vals) {
        simple_i = vals[0];
        simple_j = vals[1];
        return true;
      },
      "two vertex names")->expected(2)->required();
  ext_cmd->add_option("--deg", ext_deg)->check(CLI::Range(0, 64));
  auto* gp_cmd = alg_cmd->add_subcommand("gp", "Gorenstein-projective indecomposables");
  std::string gp_file, gp_bound, gp_field = "F2";
  std::size_t gp_budget = kDefaultTupleBudget;
  gp_cmd->add_option("algfile", gp_file)->required();
  gp_cmd->add_option("--bound", gp_bound, "dimension-vector bound d1,d2,...")->required();
  gp_cmd->add_option("--field", gp_field, "finite field for enumeration (default F2)");
  gp_cmd->add_option("--budget", gp_budget, "matrix-tuple budget");

  auto* validate_cmd = app.add_subcommand("validate-catalogue", "check every catalogue entry");

  CLI11_PARSE(app, argc, argv);

  if (decide_cmd->parsed()) {
    int given = (!ade.empty()) + (!branches_file.empty()) + (!curves_file.empty());
    if (given != 1)
      fail(ErrorKind::InvalidInput, "decide needs exactly one of --ade/--branches/--curves");
    Catalogue cat = load_catalogue(catalogue_flag);
    SingularityDescriptor s;
    if (!ade.empty())
      s.value = AdeInput{parse_ade(ade), dim};
    else if (!branches_file.empty())
      s.value = parse_branch_system(read_file(branches_file));
    else
      s.value = parse_curve_config(read_file(curves_file));
    return emit_verdict(decide(cat, s), format);
  }

  if (show_cmd->parsed()) {
    Catalogue cat = load_catalogue(catalogue_flag);
    const CatalogueEntry& e = cat.get(parse_ade(show_type));
    if (show_format == "dot")
      std::cout << export_dot(e.ar_quiver);
    else
      std::cout << serialize_translation_quiver(e.ar_quiver);
    return 0;
  }

  if (reduce_cmd->parsed()) {
    Catalogue cat = load_catalogue(catalogue_flag);
    ReductionResult r = reduce_ade(cat, parse_ade(reduce_type));
    for (const ReductionStep& step : r.steps) {
      std::cout << "remove";
      for (const auto& orbit : step.orbits) {
        std::cout << " (";
        for (std::size_t i = 0; i < orbit.size(); ++i) std::cout << (i ? "," : "") << orbit[i];
        std::cout << ")";
      }
      std::cout << " -> " << step.resulting_type.name() << "\n";
    }
    std::cout << "result: " << r.target.name() << "\n";
    std::cout << serialize_translation_quiver(r.result);
    return 0;
  }

  if (mesh_cmd->parsed()) {
    ValuedTranslationQuiver tq = parse_translation_quiver(read_file(mesh_file));
    AlgebraPresentation p = mesh_presentation(tq);
    std::cout << serialize_presentation(p);
    AlgebraInstance a = instantiate(p, cutoff);
    std::cout << "dimension: " << a.dimension() << "\n";
    return 0;
  }

  if (info_cmd->parsed()) {
    AlgebraInstance a = instantiate(parse_presentation(read_file(info_file)));
    std::cout << "dimension: " << a.dimension() << "\n";
    std::vector<std::size_t> rad = radical_power_dims(a);
    std::cout << "radical dims:";
    for (std::size_t d : rad) std::cout << " " << d;
    std::cout << "\n";
    ValuedQuiver gq = quiver_of_algebra(a);
    std::cout << "gabriel quiver:\n";
    for (const Arrow& ar : gq.quiver.arrows)
      std::cout << "  " << ar.src << " -> " << ar.dst << " (" << gq.valuation_of(ar.id)
                << ")\n";
    GorensteinReport g = is_gorenstein(a, 8);
    std::cout << "is_gorenstein: " << (g.gorenstein ? "yes" : "no");
    if (g.gorenstein)
      std::cout << " (injdim " << g.left_injective_dim.value << ","
                << g.right_injective_dim.value << ")";
    std::cout << "\n";
    return 0;
  }

  if (ext_cmd->parsed()) {
    AlgebraInstance a = instantiate(parse_presentation(read_file(ext_file)));
    Representation si = standard_module(a, StandardKind::simple, simple_i);
    Representation sj = standard_module(a, StandardKind::simple, simple_j);
    std::cout << "dim Ext^" << ext_deg << "(S_" << simple_i << ", S_" << simple_j
              << ") = " << ext_dim(si, sj, ext_deg) << "\n";
    return 0;
  }

  if (gp_cmd->parsed()) {
    AlgebraPresentation p = parse_presentation(read_file(gp_file));
    p.field = parse_field_flag(gp_field);
    AlgebraInstance a = instantiate(p);
    std::vector<std::size_t> bound = parse_bound(gp_bound);
    if (bound.size() != a.vertex_count())
      fail(ErrorKind::InvalidInput, "bound needs one entry per vertex");
    StableGpQuiver q = stable_gp_quiver(a, bound, gp_budget);
    std::cout << "non-projective GP indecomposables: " << q.modules.size() << "\n";
    for (std::size_t i = 0; i < q.modules.size(); ++i) {
      std::cout << "M" << i + 1 << ": dims";
      for (std::size_t d : q.modules[i].dims) std::cout << " " << d;
      std::cout << "\n";
    }
    std::cout << "stable quiver arrows: " << q.quiver.arrows.size() << "\n";
    for (const Arrow& ar : q.quiver.arrows)
      std::cout << "  " << ar.src << " -> " << ar.dst << "\n";
    std::cout << "syzygy pairs:";
    for (const auto& [i, j] : q.syzygy_pairs)
      std::cout << " (M" << i + 1 << ",M" << j + 1 << ")";
    std::cout << "\n";
    std::vector<std::vector<int>> comps = stable_gp_components(q);
    std::cout << "components: " << comps.size() << "\n";
    for (const auto& comp : comps) {
      std::cout << " ";
      for (int i : comp) std::cout << " M" << i + 1;
      std::cout << "\n";
    }
    return 0;
  }

  if (validate_cmd->parsed()) {
    Catalogue cat = load_catalogue(catalogue_flag);
    ValidationReport r = validate_catalogue(cat);
    std::cout << "checked: " << r.passed.size() + r.failures.size() << "\n";
    std::cout << "passed: " << r.passed.size() << "\n";
    for (const ValidationIssue& f : r.failures)
      std::cout << "FAIL " << f.entry << " [" << f.check << "]: " << f.message << "\n";
    std::cout << (r.ok() ? "catalogue ok" : "catalogue INVALID") << "\n";
    return r.ok() ? 0 : 1;
  }

  return 1;  // unreachable: require_subcommand enforces a choice
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const arsob::Error& e) {
    std::cerr << "error [" << arsob::error_kind_name(e.kind()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
