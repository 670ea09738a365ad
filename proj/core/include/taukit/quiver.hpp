#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace taukit {

using VertexId = int;
using ArrowId = int;

// Raised on malformed user-level input (bad files, bad ids, violated
// preconditions that a caller can fix).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a runtime consistency check that should be impossible to
// violate fails; signals a genuine inconsistency, never user error.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  ArrowId id;
  VertexId source;
  VertexId target;

  bool operator==(const Arrow&) const = default;
};

// Finite directed multigraph with loops and parallel arrows. Vertex and
// arrow ids are non-negative integers; all deterministic orderings use
// ascending id.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<VertexId> vertices, std::vector<Arrow> arrows);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }

  bool has_vertex(VertexId v) const;
  int vertex_index(VertexId v) const;  // position in ascending vertex list
  const Arrow& arrow(ArrowId a) const;
  int arrow_index(ArrowId a) const;  // position in ascending arrow list

  std::vector<ArrowId> arrows_from(VertexId v) const;
  std::vector<ArrowId> arrows_into(VertexId v) const;
  int out_degree(VertexId v) const;
  int in_degree(VertexId v) const;

  // Weakly connected components, each sorted ascending, ordered by smallest
  // member.
  std::vector<std::vector<VertexId>> components() const;

  bool is_acyclic() const;

  // Sources have no incoming arrows, sinks no outgoing ones (loops count on
  // both sides).
  std::vector<VertexId> sources() const;
  std::vector<VertexId> sinks() const;

  // n when the quiver is a single oriented cycle on n vertices (every vertex
  // has in-degree and out-degree exactly 1, connected), nullopt otherwise.
  std::optional<int> oriented_cycle_type() const;

  // Induced subquiver on the given vertices; arrows keep their ids.
  Quiver full_subquiver(const std::vector<VertexId>& keep) const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<VertexId> vertices_;  // ascending
  std::vector<Arrow> arrows_;       // ascending by id
};

}  // namespace taukit
