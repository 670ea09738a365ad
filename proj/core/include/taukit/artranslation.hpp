#pragma once

#include <string>
#include <vector>

#include "taukit/repr.hpp"

namespace taukit {

// Maps between sums of projectives are determined by path data: the
// component P(dom_vertices[b]) -> P(cod_vertices[c]) acts by prepending a
// linear combination of paths cod_vertices[c] -> dom_vertices[b]. The same
// data describes maps between the matching sums of injectives, where each
// path acts by deletion from the tail of an indexing path. entries[c][b]
// holds that combination.
struct PathTerm {
  Rat coeff;
  Path path;
};

struct PathMatrix {
  std::vector<VertexId> dom_vertices;
  std::vector<VertexId> cod_vertices;
  std::vector<std::vector<std::vector<PathTerm>>> entries;
};

// Reads the path data off a map between sums of projectives from the images
// of the block generators.
PathMatrix extract_from_projective(const StandardSum& dom, const StandardSum& cod,
                                   const ModuleMap& d);

// Solves for the path data of a map between sums of injectives. Every such
// map is a combination of tail-deletion operators and the solution is
// unique; throws VerificationError if no combination matches.
PathMatrix extract_from_injective(const StandardSum& dom, const StandardSum& cod,
                                  const ModuleMap& g);

// Realizes path data as a module map between the given sums, which must
// match dom_vertices / cod_vertices blockwise.
ModuleMap materialize_projective(const PathMatrix& pm, const StandardSum& dom,
                                 const StandardSum& cod);
ModuleMap materialize_injective(const PathMatrix& pm, const StandardSum& dom,
                                const StandardSum& cod);

// Transport of a map between sums of projectives across the functor sending
// each P(v) to I(v).
struct NakayamaImage {
  StandardSum dom;
  StandardSum cod;
  ModuleMap map;
};

NakayamaImage nu_on_projective_map(const StandardSum& p_dom, const StandardSum& p_cod,
                                   const ModuleMap& d);

// Auslander-Reiten translation: kernel of the transported minimal projective
// presentation. Projective modules go to zero; the zero module is rejected.
Representation tau(const Representation& m);

// Inverse translation computed through vector space duality over the
// opposite algebra. Injective modules go to zero; the zero module is
// rejected. The second overload reuses a prebuilt opposite algebra.
Representation tau_inverse(const Representation& m);
Representation tau_inverse(const Representation& m, AlgebraPtr op);

// Independent route: cokernel of the inverse transport of a minimal
// injective copresentation.
Representation tau_inverse_from_copresentation(const Representation& m);

// Exactness of 0 -> A0 -> A1 -> ... -> An -> 0: consecutive composites
// vanish and ranks complement nullities at every vertex.
bool is_exact_sequence(const std::vector<ModuleMap>& maps);

// Deterministic isomorphism test: searches integer coefficient tuples on a
// hom basis over a grid large enough that an invertible combination exists
// in the grid whenever one exists at all.
bool is_isomorphic(const Representation& m, const Representation& n);

// Diagnostic for a module m whose minimal injective copresentation
// 0 -> m -> i0 -> i1 has indecomposable i0 and decomposable i1. For each
// block of i1 it builds the five-term exact sequence
//   0 -> ker f -> ker f' -> i1'' -> cok f -> cok f' -> 0
// (f' drops the chosen block from the codomain, i1'' is that block), the
// companion sequence obtained by transporting everything to sums of
// projectives, and certificates about the two kernels.
struct FiveTermSplitReport {
  int split_block = -1;
  VertexId block_vertex = -1;
  bool seq1_exact = false;
  bool seq2_exact = false;
  bool m_indecomposable = false;
  bool n_indecomposable = false;
  bool m_non_injective = false;
  bool n_non_injective = false;
  bool endpoints_non_isomorphic = false;

  bool pass() const {
    return seq1_exact && seq2_exact && m_indecomposable && n_indecomposable &&
           m_non_injective && n_non_injective && endpoints_non_isomorphic;
  }
};

struct FiveTermReport {
  bool applicable = false;
  std::string reason;
  std::vector<FiveTermSplitReport> splits;

  bool all_pass() const {
    if (!applicable || splits.empty()) return false;
    for (const auto& s : splits)
      if (!s.pass()) return false;
    return true;
  }
};

FiveTermReport five_term_check(const Representation& m);

}  // namespace taukit
