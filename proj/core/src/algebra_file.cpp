#include "taukit/algebra_file.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace taukit {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (static_cast<unsigned char>(c) < 33 || static_cast<unsigned char>(c) > 126) return false;
  return true;
}

// Non-negative integer that fits a VertexId, or nothing.
std::optional<VertexId> numeric_token(const std::string& t) {
  if (t.empty() || t.size() > 9) return std::nullopt;
  long long v = 0;
  for (char c : t) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return static_cast<VertexId>(v);
}

}  // namespace

Quiver AlgebraFile::quiver() const {
  std::vector<Arrow> as;
  for (size_t i = 0; i < arrows.size(); ++i)
    as.push_back({static_cast<ArrowId>(i), arrows[i].source, arrows[i].target});
  return Quiver(vertices, as);
}

AlgebraPtr AlgebraFile::algebra() const {
  Quiver q = quiver();
  std::vector<Path> rels;
  for (size_t r = 0; r < relations.size(); ++r) {
    const auto& names = relations[r];
    Path p;
    for (size_t i = 0; i < names.size(); ++i) {
      ArrowId id = arrow_id(names[i]);
      const ArrowDecl& a = arrows[id];
      if (i == 0) {
        p.source = a.source;
      } else if (p.target != a.source) {
        throw InputError("relation " + std::to_string(r + 1) + ": '" + names[i] +
                         "' does not continue at vertex " + vertex_label(p.target));
      }
      p.target = a.target;
      p.arrows.push_back(id);
    }
    rels.push_back(std::move(p));
  }
  return make_monomial_algebra(std::move(q), std::move(rels));
}

const std::string& AlgebraFile::arrow_name(ArrowId id) const {
  if (id < 0 || id >= static_cast<ArrowId>(arrows.size()))
    throw InputError("unknown arrow id " + std::to_string(id));
  return arrows[id].name;
}

ArrowId AlgebraFile::arrow_id(const std::string& name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<ArrowId>(i);
  throw InputError("unknown arrow name '" + name + "'");
}

VertexId AlgebraFile::vertex_id(const std::string& label) const {
  for (size_t i = 0; i < vertex_labels.size(); ++i)
    if (vertex_labels[i] == label) return vertices[i];
  throw InputError("unknown vertex '" + label + "'");
}

const std::string& AlgebraFile::vertex_label(VertexId v) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return vertex_labels[i];
  throw InputError("unknown vertex id " + std::to_string(v));
}

AlgebraFile parse_algebra_file(const std::string& text) {
  AlgebraFile f;
  bool have_vertices = false, have_name = false;

  struct RawArrow {
    std::string name, src, tgt;
    int line;
  };
  struct RawRelation {
    std::vector<std::string> names;
    int line;
  };
  std::vector<RawArrow> raw_arrows;
  std::vector<RawRelation> raw_relations;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (size_t hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string s = strip(raw);
    if (s.empty()) continue;

    if (s.rfind("name:", 0) == 0) {
      if (have_name) fail(line, "duplicate name directive");
      have_name = true;
      f.name = strip(s.substr(5));
      if (f.name.empty()) fail(line, "empty name");
      continue;
    }

    if (s.rfind("vertices:", 0) == 0) {
      if (have_vertices) fail(line, "duplicate vertices directive");
      have_vertices = true;
      f.vertex_labels = tokens(s.substr(9));
      if (f.vertex_labels.empty()) fail(line, "no vertices listed");
      for (const auto& t : f.vertex_labels) {
        if (!valid_token(t)) fail(line, "bad vertex '" + t + "'");
        int seen = 0;
        for (const auto& u : f.vertex_labels) seen += u == t;
        if (seen > 1) fail(line, "duplicate vertex '" + t + "'");
      }
      continue;
    }

    auto ts = tokens(s);
    if (ts[0] == "arrow") {
      if (ts.size() != 4) fail(line, "arrow needs 'arrow NAME SRC TGT'");
      if (!valid_token(ts[1])) fail(line, "bad arrow name '" + ts[1] + "'");
      for (const auto& a : raw_arrows)
        if (a.name == ts[1]) fail(line, "duplicate arrow name '" + ts[1] + "'");
      raw_arrows.push_back({ts[1], ts[2], ts[3], line});
      continue;
    }

    if (ts[0] == "relation") {
      std::vector<std::string> names(ts.begin() + 1, ts.end());
      if (names.size() < 2) fail(line, "relation needs at least 2 arrows");
      for (const auto& nm : names)
        if (!valid_token(nm)) fail(line, "bad arrow name '" + nm + "'");
      raw_relations.push_back({std::move(names), line});
      continue;
    }

    fail(line, "unknown directive '" + ts[0] + "'");
  }

  if (!have_vertices) throw InputError("missing vertices directive");

  // All-numeric vertex tokens keep their values as ids; any other token
  // switches the whole file to ids 1..n in declaration order.
  bool numeric = true;
  std::vector<VertexId> values;
  for (const auto& t : f.vertex_labels) {
    auto v = numeric_token(t);
    if (!v) {
      numeric = false;
      break;
    }
    values.push_back(*v);
  }
  if (numeric) {
    for (size_t i = 0; i < values.size() && numeric; ++i)
      for (size_t j = i + 1; j < values.size(); ++j)
        if (values[i] == values[j])
          throw InputError("duplicate vertex '" + f.vertex_labels[i] + "'");
    f.vertices = std::move(values);
  } else {
    for (size_t i = 0; i < f.vertex_labels.size(); ++i)
      f.vertices.push_back(static_cast<VertexId>(i) + 1);
  }

  for (const auto& a : raw_arrows) {
    ArrowDecl d;
    d.name = a.name;
    try {
      d.source = f.vertex_id(a.src);
      d.target = f.vertex_id(a.tgt);
    } catch (const InputError&) {
      fail(a.line, "arrow '" + a.name + "' uses an undeclared vertex");
    }
    f.arrows.push_back(std::move(d));
  }
  for (auto& r : raw_relations) {
    for (const auto& nm : r.names) {
      bool known = false;
      for (const auto& a : f.arrows) known |= a.name == nm;
      if (!known) fail(r.line, "unknown arrow name '" + nm + "'");
    }
    f.relations.push_back(std::move(r.names));
  }
  return f;
}

std::string emit_algebra_file(const AlgebraFile& f) {
  std::ostringstream out;
  if (!f.name.empty()) out << "name: " << f.name << "\n";
  out << "vertices:";
  for (const auto& t : f.vertex_labels) out << " " << t;
  out << "\n";
  for (const auto& a : f.arrows)
    out << "arrow " << a.name << " " << f.vertex_label(a.source) << " "
        << f.vertex_label(a.target) << "\n";
  for (const auto& names : f.relations) {
    out << "relation";
    for (const auto& nm : names) out << " " << nm;
    out << "\n";
  }
  return out.str();
}

}  // namespace taukit
