#include "monograph/export.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace monograph {

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string tex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': case '#': case '$': case '%': case '&': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

std::string label_of(const EdgeId& e, const std::optional<Morphism>& typing) {
  return typing ? e + ":" + (*typing)(e) : e;
}

void check_typing(const Monograph& m, const std::optional<Morphism>& typing) {
  if (typing && !(typing->dom() == m))
    throw Error(ErrorKind::PreconditionViolated, "typing does not start at the exported monograph");
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

std::string tips(std::size_t n) {
  std::string spec = "-{";
  for (std::size_t i = 0; i < n; ++i) spec += "Stealth[]";
  return spec + "}";
}

}  // namespace

std::string export_dot(const Monograph& m, const std::optional<Morphism>& typing) {
  check_typing(m, typing);
  std::ostringstream out;
  out << "digraph " << dot_quote(m.name().empty() ? "M" : m.name()) << " {\n";
  for (const auto& [e, seq] : m.adjacency()) {
    std::string label = dot_quote(label_of(e, typing));
    if (seq.empty())
      out << "  " << dot_quote(e) << " [shape=point, xlabel=" << label << "];\n";
    else
      out << "  " << dot_quote(e) << " [shape=box, fontsize=10, height=0.2, label=" << label << "];\n";
  }
  for (const auto& [e, seq] : m.adjacency())
    for (std::size_t i = 0; i < seq.size(); ++i)
      out << "  " << dot_quote(e) << " -> " << dot_quote(seq[i]) << " [label=\"" << i << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string export_tikz(const Monograph& m, const std::optional<Morphism>& typing) {
  check_typing(m, typing);
  for (const auto& [e, seq] : m.adjacency())
    if (seq.size() > 10)
      throw Error(ErrorKind::TooManyTips,
                  "edge '" + e + "' needs " + std::to_string(seq.size() - 1) + " tips");
  std::map<EdgeId, std::string> vertex;
  std::size_t n = m.size();
  std::ostringstream out;
  out << "% monograph " << (m.name().empty() ? "M" : m.name())
      << "; requires \\usetikzlibrary{arrows.meta}\n";
  out << "\\begin{tikzpicture}[>={Stealth[]}, name/.style={font=\\footnotesize, fill=white, "
         "inner sep=1pt}]\n";
  double radius = 1.5 + 0.25 * static_cast<double>(n);
  std::size_t i = 0;
  for (const auto& kv : m.adjacency()) {
    std::string v = "v" + std::to_string(i);
    vertex.emplace(kv.first, v);
    double angle = 90.0 - 360.0 * static_cast<double>(i) / static_cast<double>(n);
    out << "  \\coordinate (" << v << ") at (" << fixed2(angle) << ":" << fixed2(radius) << "cm);\n";
    ++i;
  }
  for (const auto& [e, seq] : m.adjacency()) {
    const std::string& v = vertex.at(e);
    std::string name = tex_escape(label_of(e, typing));
    if (seq.empty()) {
      out << "  \\fill (" << v << ") circle (1.5pt) node[above right, font=\\footnotesize] {$" << name
          << "$};\n";
    } else if (seq.size() == 1) {
      out << "  \\draw[very thick] ([xshift=-4pt]" << v << ") -- ([xshift=4pt]" << v
          << ") node[right, font=\\footnotesize] {$" << name << "$};\n";
      if (seq[0] == e)
        out << "  \\draw[->] (" << v << ") .. controls +(60:1cm) and +(120:1cm) .. (" << v << ");\n";
      else
        out << "  \\draw[->] (" << v << ") -- (" << vertex.at(seq[0]) << ");\n";
    } else {
      // Segment 0 bends through the edge's own vertex, where its name sits.
      auto join = [&](const std::string& a, const std::string& b, int angle) {
        if (a == b) return " .. controls +(" + std::to_string(angle) + ":1cm) and +(" +
                           std::to_string(angle + 60) + ":1cm) .. ";
        return std::string(" -- ");
      };
      const std::string& first = vertex.at(seq[0]);
      const std::string& second = vertex.at(seq[1]);
      out << "  \\draw[" << tips(1) << "] (" << first << ")" << join(first, v, 150) << "(" << v << ")"
          << join(v, second, 210) << "(" << second << ");\n";
      for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
        const std::string& a = vertex.at(seq[k]);
        const std::string& b = vertex.at(seq[k + 1]);
        out << "  \\draw[" << tips(k + 1) << "] (" << a << ")";
        if (a == b)
          out << " .. controls +(" << 30 * k << ":1cm) and +(" << 30 * k + 60 << ":1cm) .. ";
        else
          out << " -- ";
        out << "(" << b << ");\n";
      }
      out << "  \\node[name] at (" << v << ") {$" << name << "$};\n";
    }
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

}  // namespace monograph
