#include "arsobstruct/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "arsobstruct/errors.hpp"

namespace arsob {

namespace {

// --- univariate polynomials over Q (coefficient lists, index = degree) ---

using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool uni_zero(const UniPoly& p) { return p.empty(); }

UniPoly uni_scale(const UniPoly& p, const Rational& c) {
  UniPoly r = p;
  for (Rational& x : r) x *= c;
  uni_trim(r);
  return r;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
  UniPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  uni_trim(r);
  return r;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (uni_zero(a) || uni_zero(b)) return {};
  UniPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  uni_trim(r);
  return r;
}

UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  while (a.size() >= b.size() && !uni_zero(a)) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    uni_trim(a);
  }
  return a;
}

// Exact quotient; callers guarantee divisibility.
UniPoly uni_div(UniPoly a, const UniPoly& b) {
  UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !uni_zero(a)) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    uni_trim(a);
  }
  uni_trim(q);
  return q;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  while (!uni_zero(b)) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!uni_zero(a)) a = uni_scale(a, Rational(1) / a.back());  // monic
  return a;
}

// --- BiPoly viewed as UniPoly-in-z0 coefficients indexed by z1-degree ---

UniPoly row(const BiPoly& p, int j) {
  if (j < 0 || j >= static_cast<int>(p.coeffs.size())) return {};
  UniPoly r = p.coeffs[static_cast<std::size_t>(j)];
  uni_trim(r);
  return r;
}

BiPoly from_rows(std::vector<UniPoly> rows) {
  BiPoly p;
  for (UniPoly& r : rows) p.coeffs.push_back(std::move(r));
  p.normalize();
  return p;
}

// gcd in Q[z0] of all z1-coefficients
UniPoly content(const BiPoly& p) {
  UniPoly c;
  for (int j = 0; j <= p.degree_z1(); ++j) c = uni_gcd(c, row(p, j));
  return c;
}

BiPoly primitive_part(const BiPoly& p, const UniPoly& cont) {
  std::vector<UniPoly> rows;
  for (int j = 0; j <= p.degree_z1(); ++j) {
    UniPoly r = row(p, j);
    rows.push_back(uni_zero(r) ? UniPoly{} : uni_div(r, cont));
  }
  return from_rows(std::move(rows));
}

// pseudo-remainder of a by b with respect to z1 (coefficients in Q[z0])
BiPoly pseudo_rem(BiPoly a, const BiPoly& b) {
  UniPoly lb = row(b, b.degree_z1());
  while (a.degree_z1() >= b.degree_z1() && !a.is_zero()) {
    UniPoly la = row(a, a.degree_z1());
    int shift = a.degree_z1() - b.degree_z1();
    std::vector<UniPoly> rows;
    for (int j = 0; j <= a.degree_z1(); ++j) {
      UniPoly r = uni_mul(row(a, j), lb);
      if (j >= shift) r = uni_sub(r, uni_mul(row(b, j - shift), la));
      rows.push_back(std::move(r));
    }
    a = from_rows(std::move(rows));
  }
  return a;
}

Rational parse_rational(const std::string& tok) {
  try {
    return Rational(tok);
  } catch (const std::exception&) {
    fail(ErrorKind::SyntaxError, "invalid coefficient '" + tok + "'");
  }
}

std::string monomial_text(int i, int j) {
  std::string s;
  if (i > 0) s += "z0" + (i > 1 ? "^" + std::to_string(i) : "");
  if (j > 0) {
    if (!s.empty()) s += "*";
    s += "z1" + (j > 1 ? "^" + std::to_string(j) : "");
  }
  return s;
}

std::string canonical_edge_id(const std::string& a, const std::string& b) {
  return a < b ? a + "|" + b : b + "|" + a;
}

}  // namespace

// --- BiPoly ---

bool BiPoly::is_zero() const { return coeffs.empty(); }

int BiPoly::degree_z1() const { return static_cast<int>(coeffs.size()) - 1; }

Rational BiPoly::coeff(int i, int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs.size())) return Rational(0);
  const auto& r = coeffs[static_cast<std::size_t>(j)];
  if (i < 0 || i >= static_cast<int>(r.size())) return Rational(0);
  return r[static_cast<std::size_t>(i)];
}

void BiPoly::set_coeff(int i, int j, const Rational& value) {
  if (i < 0 || j < 0) fail(ErrorKind::InvalidInput, "negative exponent");
  if (j >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(j) + 1);
  auto& r = coeffs[static_cast<std::size_t>(j)];
  if (i >= static_cast<int>(r.size())) r.resize(static_cast<std::size_t>(i) + 1, Rational(0));
  r[static_cast<std::size_t>(i)] = value;
}

void BiPoly::normalize() {
  for (auto& r : coeffs) uni_trim(r);
  while (!coeffs.empty() && coeffs.back().empty()) coeffs.pop_back();
}

BiPoly bipoly_add(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (int j = 0; j <= b.degree_z1(); ++j)
    for (std::size_t i = 0; i < b.coeffs[static_cast<std::size_t>(j)].size(); ++i)
      r.set_coeff(static_cast<int>(i), j,
                  r.coeff(static_cast<int>(i), j) + b.coeffs[static_cast<std::size_t>(j)][i]);
  r.normalize();
  return r;
}

BiPoly bipoly_scale(const BiPoly& a, const Rational& c) {
  BiPoly r = a;
  for (auto& rw : r.coeffs)
    for (Rational& x : rw) x *= c;
  r.normalize();
  return r;
}

BiPoly bipoly_sub(const BiPoly& a, const BiPoly& b) {
  return bipoly_add(a, bipoly_scale(b, Rational(-1)));
}

BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (int j = 0; j <= a.degree_z1(); ++j)
    for (int k = 0; k <= b.degree_z1(); ++k) {
      UniPoly prod = uni_mul(row(a, j), row(b, k));
      for (std::size_t i = 0; i < prod.size(); ++i)
        r.set_coeff(static_cast<int>(i), j + k, r.coeff(static_cast<int>(i), j + k) + prod[i]);
    }
  r.normalize();
  return r;
}

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  UniPoly cont_gcd = uni_gcd(content(a), content(b));
  BiPoly pa = primitive_part(a, content(a));
  BiPoly pb = primitive_part(b, content(b));
  // primitive-part Euclid in z1 over Q[z0]
  if (pa.degree_z1() < pb.degree_z1()) std::swap(pa, pb);
  while (!pb.is_zero() && pb.degree_z1() > 0) {
    BiPoly r = pseudo_rem(pa, pb);
    pa = std::move(pb);
    pb = r.is_zero() ? BiPoly{} : primitive_part(r, content(r));
  }
  BiPoly prim;
  if (pb.is_zero())
    prim = primitive_part(pa, content(pa));
  else
    prim.set_coeff(0, 0, Rational(1));  // nonzero constant remainder: coprime parts
  // combine and normalize the leading rational coefficient to 1
  BiPoly g;
  for (std::size_t i = 0; i < cont_gcd.size(); ++i)
    g.set_coeff(static_cast<int>(i), 0, cont_gcd[i]);
  g = bipoly_mul(g, prim);
  UniPoly lead = row(g, g.degree_z1());
  return bipoly_scale(g, Rational(1) / lead.back());
}

BiPoly parse_bipoly(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(ErrorKind::SyntaxError, "empty polynomial");
  BiPoly p;
  std::size_t pos = 0;
  bool any_term = false;
  while (pos < s.size()) {
    Rational sign(1);
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -sign;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) fail(ErrorKind::SyntaxError, "dangling sign in '" + text + "'");
    Rational coeff = sign;
    int e0 = 0, e1 = 0;
    std::size_t fpos = 0;
    while (fpos < term.size()) {
      std::size_t fend = term.find('*', fpos);
      if (fend == std::string::npos) fend = term.size();
      std::string factor = term.substr(fpos, fend - fpos);
      if (factor.empty()) fail(ErrorKind::SyntaxError, "empty factor in '" + term + "'");
      if (factor[0] == 'z') {
        int exp = 1;
        std::string var = factor;
        auto caret = factor.find('^');
        if (caret != std::string::npos) {
          var = factor.substr(0, caret);
          std::string e = factor.substr(caret + 1);
          if (e.empty() || e.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorKind::SyntaxError, "invalid exponent in '" + factor + "'");
          exp = std::stoi(e);
        }
        if (var == "z0")
          e0 += exp;
        else if (var == "z1")
          e1 += exp;
        else
          fail(ErrorKind::SyntaxError, "unknown variable '" + var + "'");
      } else {
        coeff *= parse_rational(factor);
      }
      fpos = fend + 1;
    }
    p.set_coeff(e0, e1, p.coeff(e0, e1) + coeff);
    any_term = true;
    pos = end;
  }
  if (!any_term) fail(ErrorKind::SyntaxError, "empty polynomial");
  p.normalize();
  return p;
}

std::string serialize_bipoly(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int j = p.degree_z1(); j >= 0; --j) {
    const auto& r = p.coeffs[static_cast<std::size_t>(j)];
    for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) {
      Rational c = r[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      bool negative = c < 0;
      if (first)
        out << (negative ? "-" : "");
      else
        out << (negative ? " - " : " + ");
      first = false;
      Rational mag = negative ? Rational(-c) : c;
      std::string mono = monomial_text(i, j);
      if (mono.empty())
        out << mag;
      else if (mag == 1)
        out << mono;
      else
        out << mag << "*" << mono;
    }
  }
  return out.str();
}

// --- branch systems ---

void BranchSystem::validate() const {
  if (factors.empty()) fail(ErrorKind::InvalidInput, "branch system has no factors");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const BiPoly& f = factors[i];
    std::string label = "factor " + std::to_string(i + 1);
    if (f.is_zero() || f.coeff(0, 0) != 0)
      fail(ErrorKind::NotVanishingAtOrigin, label + " does not vanish at the origin");
    if (f.coeff(1, 0) == 0 && f.coeff(0, 1) == 0)
      fail(ErrorKind::ZeroLinearPart, label + " has zero linear part (not a smooth branch)");
  }
}

BranchSystem parse_branch_system(const std::string& text) {
  BranchSystem b;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    b.factors.push_back(parse_bipoly(line));
  }
  return b;
}

CAnReport recognize_cAn(const BranchSystem& b) {
  b.validate();
  for (std::size_t i = 0; i < b.factors.size(); ++i)
    for (std::size_t j = i + 1; j < b.factors.size(); ++j) {
      BiPoly g = bipoly_gcd(b.factors[i], b.factors[j]);
      if (g.coeff(0, 0) == 0)
        fail(ErrorKind::NotMutuallyPrime,
             "factors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                 " share the branch " + serialize_bipoly(g) + " = 0 through the origin");
    }
  CAnReport r;
  r.n = b.factors.size();
  r.pairwise_coprime = true;
  r.small_resolution = true;
  if (r.n == 2) {
    // independent linear parts <=> nondegenerate quadratic part <=> the node
    const BiPoly& f = b.factors[0];
    const BiPoly& g = b.factors[1];
    r.transverse_node = f.coeff(1, 0) * g.coeff(0, 1) - f.coeff(0, 1) * g.coeff(1, 0) != 0;
  }
  return r;
}

// --- curve configurations ---

void CurveConfiguration::validate() const {
  std::set<std::string> names;
  for (const Curve& c : curves) {
    if (c.name.empty()) fail(ErrorKind::InvalidInput, "curve with empty name");
    if (!names.insert(c.name).second)
      fail(ErrorKind::InvalidInput, "duplicate curve '" + c.name + "'");
  }
  std::set<std::string> seen;
  for (const auto& [a, b] : edges) {
    if (!names.count(a) || !names.count(b))
      fail(ErrorKind::UnknownVertex, "intersection references unknown curve '" +
                                         (names.count(a) ? b : a) + "'");
    if (a == b) fail(ErrorKind::InvalidInput, "self-intersection of curve '" + a + "'");
    if (!seen.insert(canonical_edge_id(a, b)).second)
      fail(ErrorKind::InvalidInput, "duplicate intersection " + a + " " + b);
  }
}

const CurveConfiguration::Curve* CurveConfiguration::find(const std::string& name) const {
  for (const Curve& c : curves)
    if (c.name == name) return &c;
  return nullptr;
}

CurveConfiguration parse_curve_config(const std::string& text) {
  CurveConfiguration cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    std::string where = "line " + std::to_string(lineno);
    if (kw == "curve") {
      CurveConfiguration::Curve c;
      if (!(ls >> c.name)) fail(ErrorKind::SyntaxError, where + ": curve needs a name");
      std::string tag;
      if (ls >> tag) {
        if (tag == "nb=(-1,-1)")
          c.bundle = NormalBundle::MinusOneMinusOne;
        else if (tag == "nb=other")
          c.bundle = NormalBundle::Other;
        else if (tag == "nb=unknown")
          c.bundle = NormalBundle::Unknown;
        else
          fail(ErrorKind::SyntaxError, where + ": unknown tag '" + tag + "'");
      }
      cfg.curves.push_back(std::move(c));
    } else if (kw == "meet") {
      std::string a, b;
      if (!(ls >> a >> b)) fail(ErrorKind::SyntaxError, where + ": meet needs two curves");
      cfg.edges.emplace_back(std::move(a), std::move(b));
    } else {
      fail(ErrorKind::SyntaxError, where + ": unknown directive '" + kw + "'");
    }
    std::string extra;
    if (ls >> extra) fail(ErrorKind::SyntaxError, where + ": trailing input '" + extra + "'");
  }
  cfg.validate();
  return cfg;
}

CtSkeleton ct_quiver_skeleton(const CurveConfiguration& c) {
  c.validate();
  if (c.curves.empty()) fail(ErrorKind::EmptyConfiguration, "no exceptional curves");
  CtSkeleton s;
  for (const auto& curve : c.curves) {
    s.quiver.vertices.push_back(curve.name);
    if (curve.bundle == NormalBundle::Other) {
      std::string id = curve.name + "_" + curve.name;
      s.quiver.arrows.push_back({id, curve.name, curve.name});
      s.mandate[id] = "loop";
    }
  }
  for (const auto& [a, b] : c.edges) {
    for (const auto& [src, dst] : {std::pair{a, b}, std::pair{b, a}}) {
      std::string id = src + "_" + dst;
      s.quiver.arrows.push_back({id, src, dst});
      s.mandate[id] = "two_cycle";
    }
  }
  s.quiver.validate();
  return s;
}

CurveClassification classify_curve_config(const CurveConfiguration& c) {
  c.validate();
  if (c.curves.empty()) fail(ErrorKind::EmptyConfiguration, "no exceptional curves");
  CurveClassification r;
  // A mandated loop is a witness regardless of anything else.
  std::optional<std::string> loop_curve;
  for (const auto& curve : c.curves)
    if (curve.bundle == NormalBundle::Other &&
        (!loop_curve || curve.name < *loop_curve))
      loop_curve = curve.name;
  if (loop_curve) {
    r.outcome = CurveOutcome::Obstructed;
    r.witness_kind = "loop";
    r.witness_vertices = {*loop_curve};
    return r;
  }
  // Any transversal intersection mandates a 2-cycle.
  std::optional<std::pair<std::string, std::string>> edge;
  for (auto [a, b] : c.edges) {
    if (b < a) std::swap(a, b);
    if (!edge || std::pair{a, b} < *edge) edge = {a, b};
  }
  if (edge) {
    r.outcome = CurveOutcome::Obstructed;
    r.witness_kind = "two_cycle";
    r.witness_vertices = {edge->first, edge->second};
    return r;
  }
  // No witnesses: a single curve decides by its normal bundle; several
  // pairwise disjoint curves stay undetermined.
  if (c.curves.size() == 1 && c.curves[0].bundle == NormalBundle::MinusOneMinusOne)
    r.outcome = CurveOutcome::Nodal;
  else
    r.outcome = CurveOutcome::Undetermined;
  return r;
}

}  // namespace arsob
