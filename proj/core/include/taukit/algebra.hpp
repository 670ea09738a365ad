#pragma once

#include "taukit/linalg.hpp"
#include "taukit/quiver.hpp"

#include <memory>
#include <span>
#include <vector>

namespace taukit {

// Directed path: arrows listed in traversal order, so {a, b} means "a then
// b" and requires target(a) == source(b). An empty arrow list is the
// constant path at source == target.
struct Path {
  VertexId source = 0;
  VertexId target = 0;
  std::vector<ArrowId> arrows;

  static Path constant(VertexId v) { return Path{v, v, {}}; }

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_constant() const { return arrows.empty(); }

  bool operator==(const Path&) const = default;
};

// Traversal-order ordering used everywhere a basis is listed: by source,
// then target, then length, then lexicographic arrow ids.
bool path_less(const Path& a, const Path& b);

// Concatenation "p then q"; requires target(p) == source(q).
Path concat(const Path& p, const Path& q);

class MonomialAlgebra;
using AlgebraPtr = std::shared_ptr<const MonomialAlgebra>;

// Path algebra of a finite quiver modulo a monomial admissible ideal, with
// the path basis materialized. Immutable after construction.
class MonomialAlgebra {
 public:
  // Validates the relations (paths of length >= 2 along the quiver),
  // normalizes them to a minimal generating set, and enumerates the basis of
  // relation-avoiding paths. Throws InputError if a relation is malformed or
  // the quotient is infinite-dimensional.
  MonomialAlgebra(Quiver quiver, std::vector<Path> relations);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Path>& relations() const { return relations_; }
  const std::vector<Path>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  // Basis paths with source i and target j, contiguous in basis order.
  std::span<const Path> group(VertexId i, VertexId j) const;

  // Position of a path in the basis; nullopt when the path is zero in the
  // algebra (contains a relation) or does not exist.
  std::optional<int> basis_index(const Path& p) const;
  bool is_basis_path(const Path& p) const { return basis_index(p).has_value(); }

  int vertex_index(VertexId v) const { return quiver_.vertex_index(v); }
  int num_vertices() const { return quiver_.num_vertices(); }

  // Entry (j, i) counts basis paths with source i and target j, so column i
  // is the dimension vector of the projective at i.
  IntMatrix cartan_matrix() const;

  // Every vertex has in-degree <= 1 and out-degree <= 1.
  bool is_nakayama() const;

 private:
  Quiver quiver_;
  std::vector<Path> relations_;
  std::vector<Path> basis_;
  std::vector<std::vector<std::pair<int, int>>> group_ranges_;  // [src idx][tgt idx] -> [begin,end)
};

AlgebraPtr make_monomial_algebra(Quiver quiver, std::vector<Path> relations);

// Same vertex and arrow ids with every arrow reversed; relations keep their
// arrow sets with the traversal order reversed.
AlgebraPtr opposite_algebra(const MonomialAlgebra& a);

// Reverses a path of `a` into a path of the opposite algebra.
Path reverse_path(const Path& p);

// Quotient by the idempotent at a source vertex v (no incoming arrows):
// drops v, its arrows, and every relation through them. Throws InputError
// when v is not a source.
AlgebraPtr delete_source_vertex(const MonomialAlgebra& a, VertexId v);

// Restriction to a union of connected components: keeps the listed
// vertices, the arrows among them, and the relations supported there.
// Throws InputError if an arrow crosses the boundary.
AlgebraPtr restrict_to_vertices(const MonomialAlgebra& a, const std::vector<VertexId>& keep);

}  // namespace taukit
