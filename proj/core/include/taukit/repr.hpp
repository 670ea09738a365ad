#pragma once

#include "taukit/algebra.hpp"
#include "taukit/linalg.hpp"

#include <vector>

namespace taukit {

// Right module over a monomial algebra: one space per vertex and, for each
// arrow a: s -> t, a matrix of shape dim(t) x dim(s) acting on column
// vectors. Construction checks that every relation acts as zero.
struct Representation {
  AlgebraPtr algebra;
  std::vector<int> dims;            // by vertex index
  std::vector<QMatrix> arrow_maps;  // by arrow index

  Representation() = default;
  Representation(AlgebraPtr alg, std::vector<int> dims, std::vector<QMatrix> maps);

  int dim(VertexId v) const { return dims[algebra->vertex_index(v)]; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  std::vector<Int> dim_vector() const { return {dims.begin(), dims.end()}; }

  const QMatrix& action(ArrowId a) const { return arrow_maps[algebra->quiver().arrow_index(a)]; }

  bool operator==(const Representation&) const = default;
};

Representation zero_representation(AlgebraPtr alg);

// Matrix of the right action along a path, acting from the source vertex
// space to the target vertex space.
QMatrix path_action(const Representation& m, const Path& p);

enum class StandardKind { simple, projective, injective };

// Simple at v; projective e_v A on basis paths with source v (arrows act by
// concatenation at the target end); injective as the dual of the
// opposite-side projective, on basis paths with target v (arrows strip
// themselves from the front).
Representation standard_module(AlgebraPtr alg, StandardKind kind, VertexId v);

// Morphism of representations. Construction checks shapes and the
// naturality square of every arrow.
struct ModuleMap {
  Representation domain;
  Representation codomain;
  std::vector<QMatrix> blocks;  // by vertex index, dim cod_v x dim dom_v

  ModuleMap() = default;
  ModuleMap(Representation dom, Representation cod, std::vector<QMatrix> blocks);

  static ModuleMap zero(const Representation& dom, const Representation& cod);

  bool is_zero() const;
  int rank_at(int vertex_index) const;

  bool operator==(const ModuleMap&) const = default;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);  // g after f

// Unique u with incl . u = f, where incl is injective and f factors through
// it. Throws VerificationError when no factorization exists.
ModuleMap factor_through_inclusion(const ModuleMap& incl, const ModuleMap& f);

// Unique w with w . proj = g, where proj is surjective and g kills
// ker(proj). Throws VerificationError when no such map exists.
ModuleMap descend_along_surjection(const ModuleMap& proj, const ModuleMap& g);

// Basis of Hom(m, n) in a deterministic echelon order.
std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n);

struct KernelCokernel {
  Representation kernel;
  ModuleMap kernel_incl;    // kernel -> domain
  Representation cokernel;
  ModuleMap cokernel_proj;  // codomain -> cokernel
};

KernelCokernel kernel_cokernel(const ModuleMap& f);

struct StructuralSeries {
  Representation top;      // semisimple quotient, arrow actions zero
  ModuleMap top_proj;      // m -> top
  Representation radical;  // span of all incoming arrow images
  ModuleMap radical_incl;  // radical -> m
  Representation socle;    // joint kernel of outgoing arrow actions
  ModuleMap socle_incl;    // socle -> m
};

StructuralSeries structural_series(const Representation& m);

// Finite direct sum of standard modules of one kind with block bookkeeping.
struct StandardSum {
  StandardKind kind = StandardKind::projective;
  std::vector<VertexId> summands;        // block vertices in order
  Representation rep;
  std::vector<std::vector<int>> offset;  // [block][vertex index] inside rep

  int blocks() const { return static_cast<int>(summands.size()); }
  // Index of the generating constant path coordinate of a projective block
  // (also the socle coordinate of an injective block), inside the vertex
  // space at the block's own vertex.
  int constant_path_slot(int block) const;
};

StandardSum make_standard_sum(AlgebraPtr alg, StandardKind kind, std::vector<VertexId> vertices);

// Sub-sum on a subset of blocks together with the coordinate inclusion and
// projection maps.
struct SumSplit {
  StandardSum part;
  ModuleMap incl;  // part -> whole
  ModuleMap proj;  // whole -> part
};

SumSplit split_sum(const StandardSum& whole, const std::vector<int>& keep_blocks);

struct ProjectiveCover {
  StandardSum p0;
  ModuleMap map;  // p0 -> m, epi with kernel inside rad p0
};

// Throws InputError on the zero module.
ProjectiveCover projective_cover(const Representation& m);

struct ProjectivePresentationData {
  StandardSum p1, p0;
  ModuleMap d;             // p1 -> p0, image inside rad p0
  ModuleMap augmentation;  // p0 -> m
};

ProjectivePresentationData minimal_projective_presentation(const Representation& m);

// Injective envelope via socle-separating functionals; the embedding
// restricts to an isomorphism on socles.
struct InjectiveEnvelope {
  StandardSum i0;
  ModuleMap map;  // m -> i0
};

InjectiveEnvelope injective_envelope(const Representation& m);

struct InjectiveCopresentationData {
  StandardSum i0, i1;
  ModuleMap embedding;  // m -> i0
  ModuleMap f;          // i0 -> i1, kernel = image of embedding
};

// Throws InputError on the zero module.
InjectiveCopresentationData minimal_injective_copresentation(const Representation& m);

// dim Ext^1(S_s, S_t): multiplicity of the projective at t in the first
// syzygy term of a minimal presentation of the simple at s.
int ext1_dim(AlgebraPtr alg, VertexId s, VertexId t);

// One arrow s -> t per nonvanishing ext1_dim(s, t); arrow ids are assigned
// in ascending (s, t) order.
Quiver ext_quiver(AlgebraPtr alg);

Representation direct_sum(const std::vector<Representation>& parts);

// Transposes every arrow action; `target` must be structurally the opposite
// algebra (same ids, arrows reversed).
Representation dual_representation(const Representation& m, AlgebraPtr target);

// Restriction to the subalgebra obtained by deleting the source vertex v
// (drop the vertex space and the maps of removed arrows), and the
// zero-extension going back.
Representation restrict_along_deleted_vertex(const Representation& m, AlgebraPtr sub);
Representation zero_extend_along_deleted_vertex(const Representation& m, AlgebraPtr full);

}  // namespace taukit
