#pragma once

#include <optional>
#include <vector>

#include "taukit/repr.hpp"

namespace taukit {

// Walk data of a connected Nakayama algebra: order lists the vertices along
// the unique arrow walk (starting at the smallest id on a cycle, at the
// unique source otherwise) and c[i] = dim P(order[i]).
struct KupischSeries {
  bool cyclic = false;
  std::vector<VertexId> order;
  std::vector<int> c;

  int n() const { return static_cast<int>(order.size()); }
  int position(VertexId v) const;
  std::optional<VertexId> successor(VertexId v) const;
  std::optional<VertexId> predecessor(VertexId v) const;
};

// Throws InputError unless the algebra is connected Nakayama.
KupischSeries kupisch_series(const MonomialAlgebra& alg);

// The indecomposables are the uniserial modules M(top, length) =
// P(top) / rad^length with 1 <= length <= c[position(top)].
struct IndecDescriptor {
  VertexId top = -1;
  int length = 0;
  bool projective = false;
  bool injective = false;
  bool simple = false;
};

IndecDescriptor describe_indec(const KupischSeries& k, VertexId top, int length);
std::vector<IndecDescriptor> enumerate_indecomposables(const KupischSeries& k);

// Composition factor counts of M(top, length), indexed like the algebra's
// sorted vertex list.
std::vector<Int> indec_dim_vector(const KupischSeries& k, const MonomialAlgebra& alg,
                                  VertexId top, int length);

// Translation in closed form: M(v, l) goes to M(successor v, l) unless
// projective; the inverse walks backwards unless injective. Empty optional
// means the translate is zero.
std::optional<IndecDescriptor> closed_form_tau(const KupischSeries& k, VertexId top, int length);
std::optional<IndecDescriptor> closed_form_tau_inverse(const KupischSeries& k, VertexId top,
                                                       int length);

// Explicit representation of M(top, length).
Representation nakayama_module(AlgebraPtr alg, const KupischSeries& k, VertexId top, int length);

// Over a Nakayama algebra a module with simple top S(top) is the uniserial
// quotient of P(top) of its dimension, so isomorphism type is decided by the
// top and the total dimension.
bool isomorphic_to_indec(const Representation& m, VertexId top, int length);

// Connected Nakayama algebra with the given walk sizes: vertices 1..n along
// a cycle or a line, arrow ids in walk order, one relation of length c[i]
// from each vertex whose walk is long enough. Throws InputError when the
// series is not admissible.
AlgebraPtr algebra_from_kupisch(bool cyclic, const std::vector<int>& c);

}  // namespace taukit
