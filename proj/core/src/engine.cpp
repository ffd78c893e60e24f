#include "arsobstruct/engine.hpp"

#include <algorithm>

#include "arsobstruct/errors.hpp"
#include "arsobstruct/mesh.hpp"

namespace arsob {

namespace {

constexpr const char* kCiteKnoerrer = "Knoerrer periodicity";
constexpr const char* kCiteNodal = "Theorem 1.5";
constexpr const char* kCiteLoop = "Theorem 8.9";
constexpr const char* kCiteFrakS = "Theorem 7.1";
constexpr const char* kCiteReduction = "Corollary 6.16";
constexpr const char* kCiteBranch = "Proposition B.2";
constexpr const char* kCiteTwoCycle = "Proposition 7.5";
constexpr const char* kCiteCurveLoop = "Remark 7.9";

void add_citation(std::vector<std::string>& cites, const std::string& anchor) {
  if (std::find(cites.begin(), cites.end(), anchor) == cites.end())
    cites.push_back(anchor);
}

void push_step(Verdict& v, std::string kind, Json payload, std::string cite) {
  add_citation(v.citations, cite);
  v.certificate.push_back({std::move(kind), std::move(payload), std::move(cite)});
}

Json ade_json(const ADEType& t, int dim) {
  Json j;
  j["kind"] = "ade";
  j["type"] = t.name();
  j["dim"] = dim;
  return j;
}

Json branches_json(const BranchSystem& b) {
  Json j;
  j["kind"] = "branches";
  Json factors = Json::array();
  for (const BiPoly& f : b.factors) factors.push_back(serialize_bipoly(f));
  j["factors"] = std::move(factors);
  j["dim"] = 3;
  return j;
}

const char* bundle_name(NormalBundle nb) {
  switch (nb) {
    case NormalBundle::MinusOneMinusOne: return "(-1,-1)";
    case NormalBundle::Other: return "other";
    default: return "unknown";
  }
}

Json curves_json(const CurveConfiguration& c) {
  Json j;
  j["kind"] = "curves";
  Json curves = Json::array();
  for (const auto& curve : c.curves) {
    Json cj;
    cj["name"] = curve.name;
    cj["normal_bundle"] = bundle_name(curve.bundle);
    curves.push_back(std::move(cj));
  }
  j["curves"] = std::move(curves);
  Json meets = Json::array();
  for (const auto& [a, b] : c.edges) meets.push_back(Json::array({a, b}));
  j["meets"] = std::move(meets);
  j["dim"] = 3;
  return j;
}

Json orbits_json(const std::vector<std::vector<std::string>>& orbits) {
  Json j = Json::array();
  for (const auto& orbit : orbits) {
    Json o = Json::array();
    for (const std::string& v : orbit) o.push_back(v);
    j.push_back(std::move(o));
  }
  return j;
}

void conclude_fraks(Verdict& v, const Catalogue& cat, const ADEType& type) {
  const CatalogueEntry& entry = cat.get(type);
  if (!entry.in_frakS)
    fail(ErrorKind::InvalidInput,
         "internal: contrapositive applied outside the small-resolution region (" +
             type.name() + ")");
  Json payload;
  payload["type"] = type.name();
  payload["in_frakS"] = true;
  payload["nodal"] = false;
  push_step(v, "FrakSContrapositive", std::move(payload), kCiteFrakS);
  v.outcome = Outcome::Obstructed;
}

Verdict decide_ade(const Catalogue& cat, const AdeInput& in) {
  Verdict v;
  v.input = ade_json(in.type, in.dim);
  if (in.dim < 1) fail(ErrorKind::InvalidInput, "dimension must be >= 1");
  if (in.dim % 2 == 0) {
    v.normalized = v.input;
    v.outcome = Outcome::OutOfScope;
    add_citation(v.citations, kCiteNodal);  // odd-dimension hypothesis
    return v;
  }
  ADEDescriptor norm = knoerrer_normalize(in.type, in.dim);
  v.normalized = ade_json(norm.type, norm.dim);
  {
    Json payload;
    payload["from_dim"] = in.dim;
    payload["to_dim"] = norm.dim;
    payload["type"] = norm.type.name();
    push_step(v, "KnoerrerNormalize", std::move(payload), kCiteKnoerrer);
  }
  const ADEType& t = norm.type;
  const CatalogueEntry& entry = cat.get(t);
  if (t.family == ADEFamily::A && t.index == 1) {
    v.outcome = Outcome::NodalUnobstructed;
    add_citation(v.citations, kCiteNodal);
    return v;
  }
  if (entry.has_loop) {  // A_{2m}: loop in the stable AR-quiver
    Json payload;
    payload["type"] = t.name();
    payload["loop_vertex"] = *detect_loops(entry.ar_quiver.base.quiver).begin();
    push_step(v, "CatalogueLoop", std::move(payload), kCiteLoop);
    v.outcome = Outcome::Obstructed;
    return v;
  }
  if (entry.in_frakS) {  // A_{2m+1}, D_{2m}: directly in the contrapositive region
    conclude_fraks(v, cat, t);
    return v;
  }
  // D_{2m+1}, E_6, E_7, E_8: reduce first, then apply the contrapositive
  ReductionResult red = reduce_ade(cat, t);
  for (const ReductionStep& step : red.steps) {
    Json payload;
    payload["orbits"] = orbits_json(step.orbits);
    payload["result"] = step.resulting_type.name();
    push_step(v, "AuslanderSolbergReduction", std::move(payload), kCiteReduction);
  }
  conclude_fraks(v, cat, red.target);
  return v;
}

Verdict decide_branches(const Catalogue& cat, const BranchSystem& b) {
  Verdict v;
  v.input = branches_json(b);
  CAnReport r = recognize_cAn(b);
  v.normalized = v.input;
  v.normalized["n"] = r.n;
  v.normalized["transverse_node"] = r.transverse_node;
  Json payload;
  payload["n"] = r.n;
  payload["pairwise_coprime"] = r.pairwise_coprime;
  payload["transverse_node"] = r.transverse_node;
  payload["small_resolution"] = r.small_resolution;
  push_step(v, "BranchRecognition", std::move(payload), kCiteBranch);
  if (r.transverse_node) {
    v.outcome = Outcome::NodalUnobstructed;
    add_citation(v.citations, kCiteNodal);
    return v;
  }
  // Non-nodal cA_n with a small resolution: in the contrapositive region.
  Json fraks;
  fraks["in_frakS"] = true;
  fraks["nodal"] = false;
  push_step(v, "FrakSContrapositive", std::move(fraks), kCiteFrakS);
  v.outcome = Outcome::Obstructed;
  (void)cat;
  return v;
}

Verdict decide_curves(const CurveConfiguration& c) {
  Verdict v;
  v.input = curves_json(c);
  v.normalized = v.input;
  CurveClassification r = classify_curve_config(c);
  switch (r.outcome) {
    case CurveOutcome::Obstructed: {
      Json payload;
      if (r.witness_kind == "loop") {
        payload["curve"] = r.witness_vertices[0];
        push_step(v, "CurveLoop", std::move(payload), kCiteCurveLoop);
      } else {
        payload["curves"] = Json::array({r.witness_vertices[0], r.witness_vertices[1]});
        push_step(v, "CurveTwoCycle", std::move(payload), kCiteTwoCycle);
      }
      v.outcome = Outcome::Obstructed;
      break;
    }
    case CurveOutcome::Nodal:
      v.outcome = Outcome::NodalUnobstructed;
      add_citation(v.citations, kCiteCurveLoop);
      add_citation(v.citations, kCiteNodal);
      break;
    case CurveOutcome::Undetermined:
      v.outcome = Outcome::Undetermined;
      break;
  }
  return v;
}

}  // namespace

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::NodalUnobstructed: return "nodal_unobstructed";
    case Outcome::Obstructed: return "obstructed";
    case Outcome::OutOfScope: return "out_of_scope";
    default: return "undetermined";
  }
}

Verdict decide(const Catalogue& cat, const SingularityDescriptor& s) {
  if (const auto* ade = std::get_if<AdeInput>(&s.value)) return decide_ade(cat, *ade);
  if (const auto* b = std::get_if<BranchSystem>(&s.value)) return decide_branches(cat, *b);
  return decide_curves(std::get<CurveConfiguration>(s.value));
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["input"] = v.input;
  j["normalized"] = v.normalized;
  j["outcome"] = outcome_name(v.outcome);
  Json cert = Json::array();
  for (const CertificateStep& step : v.certificate) {
    Json sj;
    sj["kind"] = step.kind;
    sj["payload"] = step.payload;
    sj["cite"] = step.cite;
    cert.push_back(std::move(sj));
  }
  j["certificate"] = std::move(cert);
  j["citations"] = v.citations;
  return j;
}

std::string explain(const Verdict& v) {
  std::string out;
  out += "input: " + v.input.dump() + "\n";
  out += "normalized: " + v.normalized.dump() + "\n";
  int k = 0;
  for (const CertificateStep& step : v.certificate) {
    out += "step " + std::to_string(++k) + ": " + step.kind;
    if (step.kind == "AuslanderSolbergReduction") {
      out += " removes orbits ";
      bool first_orbit = true;
      for (const auto& orbit : step.payload.at("orbits")) {
        if (!first_orbit) out += ",";
        first_orbit = false;
        out += "(";
        bool first_v = true;
        for (const auto& vertex : orbit) {
          if (!first_v) out += ",";
          first_v = false;
          out += vertex.get<std::string>();
        }
        out += ")";
      }
      out += " giving " + step.payload.at("result").get<std::string>();
    } else if (step.kind == "CatalogueLoop") {
      out += " finds a loop at " + step.payload.at("loop_vertex").get<std::string>() + " in " +
             step.payload.at("type").get<std::string>();
    } else if (step.kind == "CurveLoop") {
      out += " mandates a loop at " + step.payload.at("curve").get<std::string>();
    } else if (step.kind == "CurveTwoCycle") {
      out += " mandates a 2-cycle between " +
             step.payload.at("curves")[0].get<std::string>() + " and " +
             step.payload.at("curves")[1].get<std::string>();
    } else {
      out += " " + step.payload.dump();
    }
    out += " [" + step.cite + "]\n";
  }
  out += "outcome: " + std::string(outcome_name(v.outcome));
  if (!v.citations.empty()) {
    out += " [";
    for (std::size_t i = 0; i < v.citations.size(); ++i)
      out += (i ? "; " : "") + v.citations[i];
    out += "]";
  }
  out += "\n";
  return out;
}

}  // namespace arsob
