#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "taukit/nakayama.hpp"
#include "taukit/repr.hpp"

namespace taukit {

enum class CoxeterSign { plus, minus };

// sign * C^T * C^{-1} for the Cartan matrix C; defined when C is invertible
// over the rationals.
struct CoxeterResult {
  bool cartan_invertible = false;
  bool integral = false;
  QMatrix matrix;
};

CoxeterResult coxeter_matrix(const MonomialAlgebra& alg, CoxeterSign sign);

// Picks the sign whose matrix sends the class of every non-projective
// simple to the class of its translate; plus when nothing constrains the
// choice. valid is false when neither sign works.
struct ValidatedCoxeter {
  CoxeterSign sign = CoxeterSign::plus;
  bool valid = false;
  CoxeterResult result;
};

ValidatedCoxeter validated_coxeter(AlgebraPtr alg);

// A pair (class of M, class of tau M) that a candidate matrix must respect.
struct TauMapConstraint {
  std::vector<Int> from;
  std::vector<Int> to;
};

// Integer matrix X with X * from = to for every constraint, found row by
// row; empty optional when some row has no integer solution. An empty
// constraint list yields the zero matrix.
std::optional<IntMatrix> tau_map_feasible(const std::vector<TauMapConstraint>& constraints,
                                          int n);

// Unit columns sending each vertex class to the class of its walk successor;
// this matrix sends the class of every non-projective M(v, l) to the class
// of M(successor v, l). A projective simple puts no constraint on its
// column: the assignment x may supply one (keyed by vertex, length matching
// the vertex count), and unassigned columns stay zero. Assigning a vertex
// whose simple is not projective is an error.
IntMatrix nakayama_tau_matrix(const KupischSeries& k, const MonomialAlgebra& alg,
                              const std::map<VertexId, std::vector<Int>>& x = {});

enum class TauMapStatus { exists, not_exists, undecided };

struct ComponentVerdict {
  std::vector<VertexId> vertices;
  std::string branch;
  TauMapStatus status = TauMapStatus::undecided;
  std::optional<IntMatrix> witness;  // indexed by the component's sorted vertices
};

// Decides whether some integer matrix sends the class of every
// non-projective indecomposable to the class of its translate, one weak
// component at a time:
//   a component with a directed cycle admits one exactly when it is
//   Nakayama (walk successor permutation as witness); a component that is
//   acyclic with no relations always does (validated Coxeter matrix); an
//   acyclic component with relations admits one when it is Nakayama (walk
//   successor matrix) and is reported undecided otherwise.
// Verdicts combine as not_exists over undecided over exists, with a block
// diagonal witness in the exists case.
struct TauMapVerdict {
  TauMapStatus status = TauMapStatus::undecided;
  std::optional<IntMatrix> witness;  // indexed by the algebra's sorted vertices
  std::vector<ComponentVerdict> components;
};

TauMapVerdict decide_tau_map(AlgebraPtr alg);

// Builds the matrix for the inverse translation: column v is the class of
// the inverse translate of the simple at v, computed by the engine. The
// result is then checked to be a two-sided integer inverse of phi; a check
// failure lands in issue with no matrix. Requires a square matrix of the
// right size and a quiver with no sources (so no simple is injective);
// violating either is an error.
struct TauInverseMapResult {
  std::optional<IntMatrix> matrix;
  std::string issue;
};

TauInverseMapResult invert_to_tau_inverse_map(const IntMatrix& phi, AlgebraPtr alg);

// Certificate that two non-negative square integer matrices are mutually
// inverse permutation matrices. On success perm records where each basis
// vector goes under the first factor: column j carries its 1 in row
// perm[j]. On failure issue points at a negative entry, a failing product
// entry, or a non-permutation factor.
struct PermutationCheck {
  bool ok = false;
  std::vector<int> perm;
  std::string issue;
};

PermutationCheck permutation_check(const IntMatrix& a, const IntMatrix& b);

}  // namespace taukit
