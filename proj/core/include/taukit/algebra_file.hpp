#pragma once

#include <string>
#include <vector>

#include "taukit/algebra.hpp"

namespace taukit {

// Text format for bound quiver input, one directive per line:
//
//   # comment                  (also allowed after a directive)
//   name: two-cycle            (optional)
//   vertices: 1 2              (required, once)
//   arrow a 1 2                (name, source, target; ids follow declaration order)
//   relation a b               (arrow names in traversal order)
//
// Vertex and arrow names are whitespace-free ASCII tokens. When every
// vertex token is an integer the numeric values become the vertex ids;
// otherwise vertices are numbered 1..n in declaration order and the tokens
// survive as labels.
struct ArrowDecl {
  std::string name;
  VertexId source = -1;
  VertexId target = -1;
};

struct AlgebraFile {
  std::string name;
  std::vector<std::string> vertex_labels;  // declaration order
  std::vector<VertexId> vertices;          // parallel to vertex_labels
  std::vector<ArrowDecl> arrows;
  std::vector<std::vector<std::string>> relations;

  Quiver quiver() const;
  AlgebraPtr algebra() const;
  const std::string& arrow_name(ArrowId id) const;
  ArrowId arrow_id(const std::string& name) const;         // throws InputError when unknown
  VertexId vertex_id(const std::string& label) const;      // throws InputError when unknown
  const std::string& vertex_label(VertexId v) const;
};

// Throws InputError with a line number on malformed input.
AlgebraFile parse_algebra_file(const std::string& text);

std::string emit_algebra_file(const AlgebraFile& f);

}  // namespace taukit
