#include <sstream>

#include "arsobstruct/quiver.hpp"

namespace arsob {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;  // comment to end of line
    tokens.push_back(tok);
  }
  return tokens;
}

}  // namespace

ValuedTranslationQuiver parse_translation_quiver(const std::string& text) {
  ValuedQuiver vq;
  std::map<std::string, std::string> tau;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (tok[0] == "vertex") {
      if (tok.size() < 2) fail(ErrorKind::SyntaxError, "vertex needs a label" + where);
      for (std::size_t i = 1; i < tok.size(); ++i) vq.quiver.vertices.push_back(tok[i]);
    } else if (tok[0] == "arrow") {
      if (tok.size() != 4 && tok.size() != 5)
        fail(ErrorKind::SyntaxError, "arrow needs: id src dst [valuation]" + where);
      int val = 1;
      if (tok.size() == 5) {
        try {
          val = std::stoi(tok[4]);
        } catch (const std::exception&) {
          fail(ErrorKind::SyntaxError, "bad valuation '" + tok[4] + "'" + where);
        }
      }
      vq.quiver.arrows.push_back({tok[1], tok[2], tok[3]});
      vq.valuation[tok[1]] = val;
    } else if (tok[0] == "tau") {
      if (tok.size() != 3) fail(ErrorKind::SyntaxError, "tau needs: x y" + where);
      tau[tok[1]] = tok[2];
    } else {
      fail(ErrorKind::SyntaxError, "unknown declaration '" + tok[0] + "'" + where);
    }
  }
  return build_translation_quiver(vq, tau);
}

std::string serialize_translation_quiver(const ValuedTranslationQuiver& tq) {
  std::ostringstream out;
  for (const std::string& v : tq.base.quiver.vertices) out << "vertex " << v << "\n";
  for (const Arrow& a : tq.base.quiver.arrows) {
    out << "arrow " << a.id << " " << a.src << " " << a.dst;
    int val = tq.base.valuation_of(a.id);
    if (val != 1) out << " " << val;
    out << "\n";
  }
  for (const std::string& v : tq.base.quiver.vertices)
    out << "tau " << v << " " << tq.tau_of(v) << "\n";
  return out.str();
}

std::string export_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph {\n";
  for (const std::string& v : q.vertices) out << "  \"" << v << "\";\n";
  for (const Arrow& a : q.arrows)
    out << "  \"" << a.src << "\" -> \"" << a.dst << "\";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const ValuedTranslationQuiver& tq) {
  std::ostringstream out;
  out << "digraph {\n";
  for (const std::string& v : tq.base.quiver.vertices) out << "  \"" << v << "\";\n";
  for (const Arrow& a : tq.base.quiver.arrows) {
    out << "  \"" << a.src << "\" -> \"" << a.dst << "\"";
    int val = tq.base.valuation_of(a.id);
    if (val != 1) out << " [label=\"" << val << "\"]";
    out << ";\n";
  }
  for (const std::string& v : tq.base.quiver.vertices)
    out << "  \"" << v << "\" -> \"" << tq.tau_of(v) << "\" [style=dashed];\n";
  out << "}\n";
  return out.str();
}

}  // namespace arsob
