#include "arsobstruct/algebra.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <sstream>

namespace arsob {

namespace {

using Word = std::vector<int>;

// length-then-lexicographic order on arrow-index words
struct WordCmp {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using Poly = std::map<Word, Rational, WordCmp>;

// first position where `pat` occurs as a contiguous subword of `w`, or -1
int find_subword(const Word& w, const Word& pat) {
  if (pat.size() > w.size()) return -1;
  for (std::size_t pos = 0; pos + pat.size() <= w.size(); ++pos) {
    bool match = true;
    for (std::size_t k = 0; k < pat.size(); ++k)
      if (w[pos + k] != pat[k]) { match = false; break; }
    if (match) return static_cast<int>(pos);
  }
  return -1;
}

struct Rule {
  Word lead;
  Poly rest;  // lead = rest in the quotient; all rest terms < lead
  bool alive = true;
};

// Rewriting engine: length-capped noncommutative Groebner basis.
class Rewriter {
public:
  Rewriter(int cap, std::size_t rule_budget) : cap_(cap), budget_(rule_budget) {}

  const std::vector<Rule>& rules() const { return rules_; }

  void add(Poly f, const Field& field) {
    f = reduce(std::move(f), field);
    if (f.empty()) return;
    const Word& lead = f.rbegin()->first;
    if (lead.size() > static_cast<std::size_t>(cap_)) return;  // beyond cap: irrelevant
    Rational lc = f.rbegin()->second;
    Rule rule;
    rule.lead = lead;
    Rational inv = field.inv(lc);
    for (const auto& [w, c] : f) {
      if (w == lead) continue;
      rule.rest[w] = field.neg(field.mul(c, inv));
    }
    // retire rules whose lead became reducible by the new one; re-add them
    std::vector<Poly> readd;
    for (Rule& old : rules_) {
      if (!old.alive) continue;
      if (find_subword(old.lead, rule.lead) >= 0) {
        old.alive = false;
        Poly p;
        p[old.lead] = 1;
        for (const auto& [w, c] : old.rest) p[w] = field.neg(c);
        readd.push_back(std::move(p));
      }
    }
    std::size_t idx = rules_.size();
    rules_.push_back(std::move(rule));
    if (rules_.size() > budget_)
      fail(ErrorKind::NotAdmissibleWithinCap, "rewriting-rule budget exceeded");
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      pending_.push_back({idx, j});
      if (j != idx) pending_.push_back({j, idx});
    }
    for (Poly& p : readd) add(std::move(p), field);
  }

  void complete(const Field& field) {
    while (!pending_.empty()) {
      auto [i, j] = pending_.front();
      pending_.pop_front();
      if (!rules_[i].alive || !rules_[j].alive) continue;
      const Word wi = rules_[i].lead;
      const Word wj = rules_[j].lead;
      std::size_t kmax = std::min(wi.size(), wj.size()) - 1;
      for (std::size_t k = 1; k <= kmax; ++k) {
        // suffix of wi of length k == prefix of wj of length k?
        bool match = true;
        for (std::size_t t = 0; t < k; ++t)
          if (wi[wi.size() - k + t] != wj[t]) { match = false; break; }
        if (!match) continue;
        std::size_t total = wi.size() + wj.size() - k;
        if (total > static_cast<std::size_t>(cap_)) continue;
        // overlap word w = wi . wj[k..]; S-poly = rest_i * suffix - prefix * rest_j
        Word suffix(wj.begin() + k, wj.end());
        Word prefix(wi.begin(), wi.end() - k);
        Poly s;
        for (const auto& [w, c] : rules_[i].rest) {
          Word nw = w;
          nw.insert(nw.end(), suffix.begin(), suffix.end());
          Rational& slot = s[nw];
          slot = field.add(slot, c);
          if (slot == 0) s.erase(nw);
        }
        for (const auto& [w, c] : rules_[j].rest) {
          Word nw = prefix;
          nw.insert(nw.end(), w.begin(), w.end());
          Rational& slot = s[nw];
          slot = field.sub(slot, c);
          if (slot == 0) s.erase(nw);
        }
        add(std::move(s), field);
      }
    }
  }

  Poly reduce(Poly f, const Field& field) const {
    while (true) {
      bool changed = false;
      for (auto it = f.rbegin(); it != f.rend(); ++it) {
        const Word w = it->first;
        const Rational c = it->second;
        for (const Rule& r : rules_) {
          if (!r.alive) continue;
          int pos = find_subword(w, r.lead);
          if (pos < 0) continue;
          Word u(w.begin(), w.begin() + pos);
          Word v(w.begin() + pos + r.lead.size(), w.end());
          f.erase(w);
          for (const auto& [t, tc] : r.rest) {
            Word nw = u;
            nw.insert(nw.end(), t.begin(), t.end());
            nw.insert(nw.end(), v.begin(), v.end());
            Rational& slot = f[nw];
            slot = field.add(slot, field.mul(c, tc));
            if (slot == 0) f.erase(nw);
          }
          changed = true;
          break;
        }
        if (changed) break;  // iterator into f is now invalid
      }
      if (!changed) return f;
    }
  }

private:
  int cap_;
  std::size_t budget_;
  std::vector<Rule> rules_;
  std::deque<std::pair<std::size_t, std::size_t>> pending_;
};

const std::regex kNumberRe(R"(^-?[0-9]+(/[0-9]+)?$)");

}  // namespace

// ---------------------------------------------------------------------------
// parsing

AlgebraPresentation parse_presentation(const std::string& text) {
  AlgebraPresentation p;
  bool field_seen = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;

  std::map<std::string, std::pair<std::string, std::string>> arrow_ends;  // id -> (src,dst)

  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok;
    {
      std::istringstream ls(line);
      std::string t;
      while (ls >> t) {
        if (t[0] == '#') break;
        tok.push_back(t);
      }
    }
    if (tok.empty()) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";

    if (tok[0] == "field") {
      if (tok.size() == 2 && tok[1] == "Q") {
        p.field = Field::rationals();
      } else if (tok.size() == 3 && tok[1] == "F") {
        unsigned long ch = 0;
        try { ch = std::stoul(tok[2]); } catch (const std::exception&) {
          fail(ErrorKind::SyntaxError, "bad characteristic" + where);
        }
        p.field = Field::prime(static_cast<std::uint32_t>(ch));
      } else {
        fail(ErrorKind::SyntaxError, "field must be 'Q' or 'F <p>'" + where);
      }
      field_seen = true;
    } else if (tok[0] == "vertex") {
      if (tok.size() < 2) fail(ErrorKind::SyntaxError, "vertex needs a label" + where);
      for (std::size_t i = 1; i < tok.size(); ++i) p.quiver.vertices.push_back(tok[i]);
    } else if (tok[0] == "arrow") {
      if (tok.size() != 4) fail(ErrorKind::SyntaxError, "arrow needs: id src dst" + where);
      p.quiver.arrows.push_back({tok[1], tok[2], tok[3]});
      arrow_ends[tok[1]] = {tok[2], tok[3]};
    } else if (tok[0] == "relation") {
      if (tok.size() < 2) fail(ErrorKind::SyntaxError, "empty relation" + where);
      Relation rel;
      int sign = 1;
      Rational coeff = 1;
      bool coeff_pending = false;
      auto flush_path = [&](const std::string& path_token) {
        PathTerm term;
        term.coeff = Rational(sign) * coeff;
        std::string id;
        std::istringstream ps(path_token);
        while (std::getline(ps, id, '*')) {
          if (id.empty()) fail(ErrorKind::SyntaxError, "empty path segment" + where);
          term.arrows.push_back(id);
        }
        if (term.arrows.size() < 2)
          fail(ErrorKind::RelationTooShort,
               "relation term '" + path_token + "' has length < 2" + where);
        // composability + endpoints
        std::string src, dst;
        for (std::size_t k = 0; k < term.arrows.size(); ++k) {
          auto it = arrow_ends.find(term.arrows[k]);
          if (it == arrow_ends.end())
            fail(ErrorKind::UnknownArrow, "unknown arrow '" + term.arrows[k] + "'" + where);
          if (k == 0) {
            src = it->second.first;
          } else if (dst != it->second.first) {
            fail(ErrorKind::NonComposablePath,
                 "path '" + path_token + "' is not composable" + where);
          }
          dst = it->second.second;
        }
        if (rel.terms.empty()) {
          rel.src = src;
          rel.dst = dst;
        } else if (rel.src != src || rel.dst != dst) {
          fail(ErrorKind::MixedEndpointsInRelation,
               "relation terms have mixed endpoints" + where);
        }
        rel.terms.push_back(std::move(term));
        sign = 1;
        coeff = 1;
        coeff_pending = false;
      };
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const std::string& t = tok[i];
        if (t == "+") {
          sign = 1;
        } else if (t == "-") {
          sign = -1;
        } else if (std::regex_match(t, kNumberRe)) {
          if (coeff_pending) fail(ErrorKind::SyntaxError, "two coefficients in a row" + where);
          coeff = Rational(t);
          coeff_pending = true;
        } else {
          flush_path(t);
        }
      }
      if (coeff_pending) fail(ErrorKind::SyntaxError, "dangling coefficient" + where);
      if (rel.terms.empty()) fail(ErrorKind::SyntaxError, "relation with no terms" + where);
      p.relations.push_back(std::move(rel));
    } else {
      fail(ErrorKind::SyntaxError, "unknown declaration '" + tok[0] + "'" + where);
    }
  }
  if (!field_seen) fail(ErrorKind::SyntaxError, "missing 'field' declaration");
  p.quiver.validate();
  return p;
}

std::string serialize_presentation(const AlgebraPresentation& p) {
  std::ostringstream out;
  out << "field " << (p.field.is_rationals() ? "Q" : "F " + std::to_string(p.field.characteristic()))
      << "\n";
  for (const std::string& v : p.quiver.vertices) out << "vertex " << v << "\n";
  for (const Arrow& a : p.quiver.arrows)
    out << "arrow " << a.id << " " << a.src << " " << a.dst << "\n";
  for (const Relation& r : p.relations) {
    out << "relation";
    bool first = true;
    for (const PathTerm& t : r.terms) {
      Rational c = t.coeff;
      if (first) {
        if (c < 0) { out << " -"; c = -c; }
      } else {
        out << (c < 0 ? " -" : " +");
        if (c < 0) c = -c;
      }
      if (c != 1) out << " " << c.str();
      out << " ";
      for (std::size_t k = 0; k < t.arrows.size(); ++k) {
        if (k) out << "*";
        out << t.arrows[k];
      }
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// instantiation

int AlgebraInstance::vertex_index(const std::string& name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) fail(ErrorKind::UnknownVertex, "unknown vertex '" + name + "'");
  return static_cast<int>(it - vertex_names_.begin());
}

int AlgebraInstance::arrow_index(const std::string& name) const {
  auto it = std::find(arrow_names_.begin(), arrow_names_.end(), name);
  if (it == arrow_names_.end()) fail(ErrorKind::UnknownArrow, "unknown arrow '" + name + "'");
  return static_cast<int>(it - arrow_names_.begin());
}

Vec AlgebraInstance::basis_element(std::size_t i) const {
  Vec v = zero_element();
  v[i] = 1;
  return v;
}

Vec AlgebraInstance::reduce_word(const std::vector<int>& word) const {
  Poly f;
  f[word] = 1;
  // inline single-poly reduction against rewrites_
  while (true) {
    bool changed = false;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
      const Word w = it->first;
      const Rational c = it->second;
      for (const Rewrite& r : rewrites_) {
        int pos = find_subword(w, r.lead);
        if (pos < 0) continue;
        Word u(w.begin(), w.begin() + pos);
        Word v(w.begin() + pos + r.lead.size(), w.end());
        f.erase(w);
        for (const auto& [t, tc] : r.rest) {
          Word nw = u;
          nw.insert(nw.end(), t.begin(), t.end());
          nw.insert(nw.end(), v.begin(), v.end());
          Rational& slot = f[nw];
          slot = field_.add(slot, field_.mul(c, tc));
          if (slot == 0) f.erase(nw);
        }
        changed = true;
        break;
      }
      if (changed) break;  // iterator into f is now invalid
    }
    if (!changed) break;
  }
  Vec out = zero_element();
  for (const auto& [w, c] : f) {
    auto it = basis_lookup_.find(w);
    if (it == basis_lookup_.end())
      fail(ErrorKind::InvalidInput, "internal: reduced word not in basis");
    out[it->second] = c;
  }
  return out;
}

Vec AlgebraInstance::multiply_basis(std::size_t i, std::size_t j) const {
  const BasisPath& u = basis_[i];
  const BasisPath& v = basis_[j];
  if (u.dst != v.src) return zero_element();
  if (v.length() == 0) return basis_element(i);
  if (u.length() == 0) return basis_element(j);
  // append v's arrows one at a time; every intermediate word has length
  // <= max basis length + 1, where the rewriting system is complete
  Vec acc = basis_element(i);
  for (int a : v.arrows) {
    Vec next = zero_element();
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (acc[k] == 0) continue;
      const BasisPath& w = basis_[k];
      if (w.dst != arrow_src_[a]) continue;  // dead end (can happen mid-sum only if zero)
      std::vector<int> word = w.arrows;
      word.push_back(a);
      Vec prod = reduce_word(word);
      for (std::size_t t = 0; t < next.size(); ++t)
        if (prod[t] != 0) next[t] = field_.add(next[t], field_.mul(acc[k], prod[t]));
    }
    acc = std::move(next);
  }
  return acc;
}

Vec AlgebraInstance::multiply(const Vec& u, const Vec& v) const {
  if (u.size() != basis_.size() || v.size() != basis_.size())
    fail(ErrorKind::BasisMismatch, "element length does not match algebra dimension");
  Vec out = zero_element();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0) continue;
      Vec prod = multiply_basis(i, j);
      Rational c = field_.mul(u[i], v[j]);
      for (std::size_t t = 0; t < out.size(); ++t)
        if (prod[t] != 0) out[t] = field_.add(out[t], field_.mul(c, prod[t]));
    }
  }
  return out;
}

std::string AlgebraInstance::element_to_string(const Vec& u) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!first) out << " + ";
    if (u[i] != 1) out << field_.to_string(u[i]) << "*";
    const BasisPath& b = basis_[i];
    if (b.length() == 0) {
      out << "e_" << vertex_names_[b.src];
    } else {
      for (std::size_t k = 0; k < b.arrows.size(); ++k) {
        if (k) out << "*";
        out << arrow_names_[b.arrows[k]];
      }
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

AlgebraInstance instantiate(const AlgebraPresentation& p, int length_cap) {
  if (length_cap < 2) fail(ErrorKind::InvalidInput, "length cap must be >= 2");
  p.quiver.validate();

  AlgebraInstance inst;
  inst.pres_ = p;
  inst.field_ = p.field;
  inst.vertex_names_ = p.quiver.vertices;
  for (const Arrow& a : p.quiver.arrows) {
    inst.arrow_names_.push_back(a.id);
    inst.arrow_src_.push_back(static_cast<int>(
        std::find(inst.vertex_names_.begin(), inst.vertex_names_.end(), a.src) -
        inst.vertex_names_.begin()));
    inst.arrow_dst_.push_back(static_cast<int>(
        std::find(inst.vertex_names_.begin(), inst.vertex_names_.end(), a.dst) -
        inst.vertex_names_.begin()));
  }

  // relation polynomials over the instance field
  Rewriter rewriter(length_cap, 50000);
  for (const Relation& rel : p.relations) {
    Poly f;
    for (const PathTerm& term : rel.terms) {
      if (term.arrows.size() < 2)
        fail(ErrorKind::RelationTooShort, "relation term of length < 2");
      Word w;
      int prev_dst = -1;
      for (const std::string& id : term.arrows) {
        int a = inst.arrow_index(id);
        if (prev_dst >= 0 && inst.arrow_src_[a] != prev_dst)
          fail(ErrorKind::NonComposablePath, "relation path not composable");
        prev_dst = inst.arrow_dst_[a];
        w.push_back(a);
      }
      Rational c = p.field.make(term.coeff);  // FieldMismatch surfaces here
      if (c == 0) continue;
      Rational& slot = f[w];
      slot = p.field.add(slot, c);
      if (slot == 0) f.erase(w);
    }
    rewriter.add(std::move(f), p.field);
  }
  rewriter.complete(p.field);

  // normal-form basis: words containing no rule lead as a subword,
  // enumerated by length then lexicographically
  std::vector<Word> leads;
  for (const Rule& r : rewriter.rules())
    if (r.alive) leads.push_back(r.lead);

  std::vector<BasisPath> basis;
  for (std::size_t v = 0; v < inst.vertex_names_.size(); ++v)
    basis.push_back(BasisPath{{}, static_cast<int>(v), static_cast<int>(v)});

  std::vector<BasisPath> frontier = basis;  // length-0 words
  int max_len = 0;
  for (int len = 1; ; ++len) {
    std::vector<BasisPath> next;
    for (const BasisPath& w : frontier) {
      for (std::size_t a = 0; a < inst.arrow_names_.size(); ++a) {
        if (inst.arrow_src_[a] != w.dst) continue;
        BasisPath nw = w;
        nw.arrows.push_back(static_cast<int>(a));
        nw.dst = inst.arrow_dst_[a];
        // only suffix occurrences can be new
        bool normal = true;
        for (const Word& lead : leads) {
          if (lead.size() > nw.arrows.size()) continue;
          bool match = true;
          std::size_t off = nw.arrows.size() - lead.size();
          for (std::size_t k = 0; k < lead.size(); ++k)
            if (nw.arrows[off + k] != lead[k]) { match = false; break; }
          if (match) { normal = false; break; }
        }
        if (normal) next.push_back(std::move(nw));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const BasisPath& x, const BasisPath& y) { return x.arrows < y.arrows; });
    if (next.empty()) break;
    if (len >= length_cap)
      fail(ErrorKind::NotAdmissibleWithinCap,
           "normal paths of length " + std::to_string(length_cap) +
               " remain: not admissible within cap");
    max_len = len;
    for (const BasisPath& w : next) basis.push_back(w);
    frontier = std::move(next);
  }

  // basis is already sorted: generated by length, lexicographically within
  inst.basis_ = std::move(basis);
  inst.nilpotency_ = max_len + 1;
  inst.e_index_.resize(inst.vertex_names_.size());
  for (std::size_t i = 0; i < inst.basis_.size(); ++i) {
    const BasisPath& b = inst.basis_[i];
    if (b.length() == 0) inst.e_index_[b.src] = i;
    else inst.basis_lookup_[b.arrows] = i;
  }

  for (const Rule& r : rewriter.rules()) {
    if (!r.alive) continue;
    AlgebraInstance::Rewrite rw;
    rw.lead = r.lead;
    for (const auto& [w, c] : r.rest) rw.rest[w] = c;
    inst.rewrites_.push_back(std::move(rw));
  }
  return inst;
}

// ---------------------------------------------------------------------------
// derived structure

namespace {

// subspace spanned by products u*v for u in U, v in V (as element vectors)
std::vector<Vec> product_span(const AlgebraInstance& a, const std::vector<Vec>& U,
                              const std::vector<Vec>& V) {
  std::vector<Vec> products;
  for (const Vec& u : U)
    for (const Vec& v : V) {
      Vec p = a.multiply(u, v);
      bool nonzero = false;
      for (const Rational& x : p)
        if (x != 0) { nonzero = true; break; }
      if (nonzero) products.push_back(std::move(p));
    }
  return span_basis(products, a.dimension(), a.field());
}

std::vector<Vec> radical_span(const AlgebraInstance& a) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    if (a.basis_path(i).length() >= 1) gens.push_back(a.basis_element(i));
  return gens;
}

}  // namespace

std::vector<std::size_t> radical_power_dims(const AlgebraInstance& a) {
  std::vector<std::size_t> dims{a.dimension()};
  std::vector<Vec> rad = span_basis(radical_span(a), a.dimension(), a.field());
  std::vector<Vec> power = rad;
  while (true) {
    std::size_t d = power.size();
    dims.push_back(d);
    if (d == 0) break;
    power = product_span(a, power, rad);
  }
  return dims;
}

ValuedQuiver quiver_of_algebra(const AlgebraInstance& a) {
  // sector (i,j): basis paths i -> j of length >= 1; rad^2 restricted there
  std::vector<Vec> rad = radical_span(a);
  std::vector<Vec> rad2 = product_span(a, rad, rad);

  ValuedQuiver out;
  out.quiver.vertices = a.presentation().quiver.vertices;
  for (std::size_t i = 0; i < a.vertex_count(); ++i) {
    for (std::size_t j = 0; j < a.vertex_count(); ++j) {
      std::vector<Vec> sector_rad, sector_rad2;
      for (std::size_t k = 0; k < a.dimension(); ++k) {
        const BasisPath& b = a.basis_path(k);
        if (b.length() >= 1 && b.src == static_cast<int>(i) && b.dst == static_cast<int>(j))
          sector_rad.push_back(a.basis_element(k));
      }
      for (const Vec& v : rad2) {
        // rad^2 vectors live in single sectors; keep those in (i,j)
        bool in_sector = true, nonzero = false;
        for (std::size_t k = 0; k < a.dimension(); ++k) {
          if (v[k] == 0) continue;
          nonzero = true;
          const BasisPath& b = a.basis_path(k);
          if (b.src != static_cast<int>(i) || b.dst != static_cast<int>(j)) {
            in_sector = false;
            break;
          }
        }
        if (nonzero && in_sector) sector_rad2.push_back(v);
      }
      std::size_t d1 = span_dim(sector_rad, a.dimension(), a.field());
      std::size_t d2 = span_dim(sector_rad2, a.dimension(), a.field());
      if (d1 > d2) {
        std::string id = "q_" + a.vertex_name(static_cast<int>(i)) + "_" +
                         a.vertex_name(static_cast<int>(j));
        out.quiver.arrows.push_back(
            {id, a.vertex_name(static_cast<int>(i)), a.vertex_name(static_cast<int>(j))});
        out.valuation[id] = static_cast<int>(d1 - d2);
      }
    }
  }
  return out;
}

AlgebraPresentation opposite_presentation(const AlgebraPresentation& p) {
  AlgebraPresentation op;
  op.field = p.field;
  op.quiver.vertices = p.quiver.vertices;
  for (const Arrow& a : p.quiver.arrows)
    op.quiver.arrows.push_back({a.id, a.dst, a.src});
  for (const Relation& r : p.relations) {
    Relation rr;
    rr.src = r.dst;
    rr.dst = r.src;
    for (const PathTerm& t : r.terms) {
      PathTerm tt;
      tt.coeff = t.coeff;
      tt.arrows.assign(t.arrows.rbegin(), t.arrows.rend());
      rr.terms.push_back(std::move(tt));
    }
    op.relations.push_back(std::move(rr));
  }
  return op;
}

}  // namespace arsob
