#include "taukit/repr.hpp"

#include <algorithm>
#include <string>

namespace taukit {

namespace {

int group_pos(const MonomialAlgebra& alg, const Path& p) {
  auto idx = alg.basis_index(p);
  if (!idx) throw VerificationError("path expected in basis but missing");
  auto g = alg.group(p.source, p.target);
  return *idx - static_cast<int>(g.data() - alg.basis().data());
}

// Extends the independent columns of `basis` to a full basis of k^n with
// standard vectors, chosen deterministically by echelon pivoting. Returns
// the indices of the chosen standard vectors.
std::vector<int> completion_indices(const QMatrix& basis, int n) {
  QMatrix t = QMatrix::hstack({basis, QMatrix::identity(n)});
  std::vector<int> pivots = rref_in_place(t);
  std::vector<int> out;
  for (int p : pivots)
    if (p >= basis.cols()) out.push_back(p - basis.cols());
  return out;
}

// Projection k^n -> k^(n-r) with kernel exactly the column space of
// `basis` (rank r), sending the completion vectors to unit coordinates.
QMatrix quotient_projection(const QMatrix& basis, int n) {
  std::vector<int> comp = completion_indices(basis, n);
  QMatrix f(n, n);
  for (int j = 0; j < basis.cols(); ++j)
    for (int i = 0; i < n; ++i) f(i, j) = basis(i, j);
  for (size_t k = 0; k < comp.size(); ++k) f(comp[k], basis.cols() + static_cast<int>(k)) = 1;
  auto finv = inverse(f);
  if (!finv) throw VerificationError("quotient basis completion is singular");
  return finv->submatrix(basis.cols(), n, 0, n);
}

QMatrix column_space_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<int> pivots = rref_in_place(r);
  QMatrix out(m.rows(), static_cast<int>(pivots.size()));
  for (size_t j = 0; j < pivots.size(); ++j)
    for (int i = 0; i < m.rows(); ++i) out(i, static_cast<int>(j)) = m(i, pivots[j]);
  return out;
}

}  // namespace

Representation::Representation(AlgebraPtr alg, std::vector<int> d, std::vector<QMatrix> maps)
    : algebra(std::move(alg)), dims(std::move(d)), arrow_maps(std::move(maps)) {
  const Quiver& q = algebra->quiver();
  if (static_cast<int>(dims.size()) != q.num_vertices())
    throw InputError("representation: one dimension per vertex required");
  for (int x : dims)
    if (x < 0) throw InputError("representation: negative dimension");
  if (static_cast<int>(arrow_maps.size()) != q.num_arrows())
    throw InputError("representation: one matrix per arrow required");
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows()[i];
    const QMatrix& m = arrow_maps[i];
    if (m.rows() != dims[q.vertex_index(a.target)] || m.cols() != dims[q.vertex_index(a.source)])
      throw InputError("representation: arrow matrix shape mismatch at arrow " +
                       std::to_string(a.id));
  }
  for (const Path& r : algebra->relations())
    if (!path_action(*this, r).is_zero())
      throw InputError("representation: relation does not act as zero");
}

int Representation::total_dim() const {
  int s = 0;
  for (int x : dims) s += x;
  return s;
}

Representation zero_representation(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<int> dims(q.num_vertices(), 0);
  std::vector<QMatrix> maps(q.num_arrows());
  return Representation(std::move(alg), std::move(dims), std::move(maps));
}

QMatrix path_action(const Representation& m, const Path& p) {
  const Quiver& q = m.algebra->quiver();
  QMatrix cur = QMatrix::identity(m.dims[q.vertex_index(p.source)]);
  for (ArrowId a : p.arrows) cur = m.action(a) * cur;
  return cur;
}

Representation standard_module(AlgebraPtr alg, StandardKind kind, VertexId v) {
  const Quiver& q = alg->quiver();
  int n = q.num_vertices();
  std::vector<int> dims(n, 0);
  std::vector<QMatrix> maps(q.num_arrows());

  if (kind == StandardKind::simple) {
    dims[q.vertex_index(v)] = 1;
    for (int i = 0; i < q.num_arrows(); ++i) {
      const Arrow& a = q.arrows()[i];
      maps[i] = QMatrix(dims[q.vertex_index(a.target)], dims[q.vertex_index(a.source)]);
    }
    return Representation(std::move(alg), std::move(dims), std::move(maps));
  }

  if (kind == StandardKind::projective) {
    for (VertexId w : q.vertices())
      dims[q.vertex_index(w)] = static_cast<int>(alg->group(v, w).size());
    for (int i = 0; i < q.num_arrows(); ++i) {
      const Arrow& a = q.arrows()[i];
      QMatrix m(dims[q.vertex_index(a.target)], dims[q.vertex_index(a.source)]);
      auto dom = alg->group(v, a.source);
      for (size_t col = 0; col < dom.size(); ++col) {
        Path ext = dom[col];
        ext.arrows.push_back(a.id);
        ext.target = a.target;
        if (alg->is_basis_path(ext)) m(group_pos(*alg, ext), static_cast<int>(col)) = 1;
      }
      maps[i] = std::move(m);
    }
    return Representation(std::move(alg), std::move(dims), std::move(maps));
  }

  // Injective: coordinates are dual to basis paths with target v; an arrow
  // acts by removing itself from the front of the indexing path.
  for (VertexId w : q.vertices())
    dims[q.vertex_index(w)] = static_cast<int>(alg->group(w, v).size());
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows()[i];
    QMatrix m(dims[q.vertex_index(a.target)], dims[q.vertex_index(a.source)]);
    auto dom = alg->group(a.source, v);
    for (size_t col = 0; col < dom.size(); ++col) {
      const Path& p = dom[col];
      if (p.is_constant() || p.arrows.front() != a.id) continue;
      Path rest{a.target, v, {p.arrows.begin() + 1, p.arrows.end()}};
      m(group_pos(*alg, rest), static_cast<int>(col)) = 1;
    }
    maps[i] = std::move(m);
  }
  return Representation(std::move(alg), std::move(dims), std::move(maps));
}

ModuleMap::ModuleMap(Representation dom, Representation cod, std::vector<QMatrix> b)
    : domain(std::move(dom)), codomain(std::move(cod)), blocks(std::move(b)) {
  if (domain.algebra != codomain.algebra) throw InputError("module map: algebra mismatch");
  const Quiver& q = domain.algebra->quiver();
  if (static_cast<int>(blocks.size()) != q.num_vertices())
    throw InputError("module map: one block per vertex required");
  for (int i = 0; i < q.num_vertices(); ++i)
    if (blocks[i].rows() != codomain.dims[i] || blocks[i].cols() != domain.dims[i])
      throw InputError("module map: block shape mismatch");
  for (const Arrow& a : q.arrows()) {
    int s = q.vertex_index(a.source), t = q.vertex_index(a.target);
    if (!(blocks[t] * domain.action(a.id) == codomain.action(a.id) * blocks[s]))
      throw InputError("module map: naturality fails at arrow " + std::to_string(a.id));
  }
}

ModuleMap ModuleMap::zero(const Representation& dom, const Representation& cod) {
  std::vector<QMatrix> blocks;
  for (size_t i = 0; i < dom.dims.size(); ++i)
    blocks.emplace_back(cod.dims[i], dom.dims[i]);
  return ModuleMap(dom, cod, std::move(blocks));
}

bool ModuleMap::is_zero() const {
  for (const auto& b : blocks)
    if (!b.is_zero()) return false;
  return true;
}

int ModuleMap::rank_at(int vertex_index) const { return rank(blocks[vertex_index]); }

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (!(f.codomain == g.domain)) throw InputError("compose: middle object mismatch");
  std::vector<QMatrix> blocks;
  for (size_t i = 0; i < f.blocks.size(); ++i) blocks.push_back(g.blocks[i] * f.blocks[i]);
  return ModuleMap(f.domain, g.codomain, std::move(blocks));
}

ModuleMap factor_through_inclusion(const ModuleMap& incl, const ModuleMap& f) {
  if (!(incl.codomain == f.codomain)) throw InputError("factor: ambient object mismatch");
  std::vector<QMatrix> blocks;
  for (size_t i = 0; i < incl.blocks.size(); ++i) {
    auto u = solve(incl.blocks[i], f.blocks[i]);
    if (!u) throw VerificationError("factor_through_inclusion: map does not factor");
    blocks.push_back(std::move(*u));
  }
  return ModuleMap(f.domain, incl.domain, std::move(blocks));
}

ModuleMap descend_along_surjection(const ModuleMap& proj, const ModuleMap& g) {
  if (!(proj.domain == g.domain)) throw InputError("descend: source object mismatch");
  std::vector<QMatrix> blocks;
  for (size_t i = 0; i < proj.blocks.size(); ++i) {
    auto w = solve(proj.blocks[i].transpose(), g.blocks[i].transpose());
    if (!w) throw VerificationError("descend_along_surjection: map does not descend");
    blocks.push_back(w->transpose());
  }
  return ModuleMap(proj.codomain, g.codomain, std::move(blocks));
}

std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n) {
  if (m.algebra != n.algebra) throw InputError("hom_basis: algebra mismatch");
  const Quiver& q = m.algebra->quiver();
  int nv = q.num_vertices();

  std::vector<int> offset(nv + 1, 0);
  for (int i = 0; i < nv; ++i) offset[i + 1] = offset[i] + n.dims[i] * m.dims[i];
  int unknowns = offset[nv];
  auto slot = [&](int v, int r, int c) { return offset[v] + r * m.dims[v] + c; };

  int eqs = 0;
  for (const Arrow& a : q.arrows())
    eqs += n.dims[q.vertex_index(a.target)] * m.dims[q.vertex_index(a.source)];
  QMatrix sys(eqs, unknowns);
  int row = 0;
  for (const Arrow& a : q.arrows()) {
    int s = q.vertex_index(a.source), t = q.vertex_index(a.target);
    const QMatrix& am = m.action(a.id);  // m_t x m_s
    const QMatrix& an = n.action(a.id);  // n_t x n_s
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c) {
        for (int k = 0; k < m.dims[t]; ++k)
          if (am(k, c) != 0) sys(row, slot(t, r, k)) += am(k, c);
        for (int k = 0; k < n.dims[s]; ++k)
          if (an(r, k) != 0) sys(row, slot(s, k, c)) -= an(r, k);
        ++row;
      }
  }

  QMatrix basis = nullspace_basis(sys);
  std::vector<ModuleMap> out;
  for (int j = 0; j < basis.cols(); ++j) {
    std::vector<QMatrix> blocks;
    for (int v = 0; v < nv; ++v) {
      QMatrix b(n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c) b(r, c) = basis(slot(v, r, c), j);
      blocks.push_back(std::move(b));
    }
    out.emplace_back(m, n, std::move(blocks));
  }
  return out;
}

KernelCokernel kernel_cokernel(const ModuleMap& f) {
  const Quiver& q = f.domain.algebra->quiver();
  int nv = q.num_vertices();

  std::vector<QMatrix> kbasis(nv), ibasis(nv), pis(nv);
  std::vector<int> kdims(nv), cdims(nv);
  for (int v = 0; v < nv; ++v) {
    kbasis[v] = nullspace_basis(f.blocks[v]);
    kdims[v] = kbasis[v].cols();
    ibasis[v] = column_space_basis(f.blocks[v]);
    pis[v] = quotient_projection(ibasis[v], f.codomain.dims[v]);
    cdims[v] = pis[v].rows();
  }

  std::vector<QMatrix> kmaps(q.num_arrows()), cmaps(q.num_arrows());
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows()[i];
    int s = q.vertex_index(a.source), t = q.vertex_index(a.target);
    auto km = solve(kbasis[t], f.domain.action(a.id) * kbasis[s]);
    if (!km) throw VerificationError("kernel is not arrow-stable");
    kmaps[i] = std::move(*km);
    auto cm = solve(pis[s].transpose(), (pis[t] * f.codomain.action(a.id)).transpose());
    if (!cm) throw VerificationError("cokernel action does not descend");
    cmaps[i] = cm->transpose();
  }

  Representation ker(f.domain.algebra, kdims, std::move(kmaps));
  Representation cok(f.domain.algebra, cdims, std::move(cmaps));
  ModuleMap incl(ker, f.domain, kbasis);
  ModuleMap proj(f.codomain, cok, pis);
  return {std::move(ker), std::move(incl), std::move(cok), std::move(proj)};
}

StructuralSeries structural_series(const Representation& m) {
  const Quiver& q = m.algebra->quiver();
  int nv = q.num_vertices();

  std::vector<QMatrix> rad(nv), socle(nv), proj(nv);
  std::vector<int> rdims(nv), sdims(nv), tdims(nv);
  for (int v = 0; v < nv; ++v) {
    VertexId vid = q.vertices()[v];
    std::vector<QMatrix> in_images{QMatrix(m.dims[v], 0)};
    for (ArrowId a : q.arrows_into(vid)) in_images.push_back(m.action(a));
    rad[v] = column_space_basis(QMatrix::hstack(in_images));
    rdims[v] = rad[v].cols();
    proj[v] = quotient_projection(rad[v], m.dims[v]);
    tdims[v] = proj[v].rows();

    std::vector<QMatrix> out_maps{QMatrix(0, m.dims[v])};
    for (ArrowId a : q.arrows_from(vid)) out_maps.push_back(m.action(a));
    socle[v] = nullspace_basis(QMatrix::vstack(out_maps));
    sdims[v] = socle[v].cols();
  }

  std::vector<QMatrix> rmaps(q.num_arrows()), zt(q.num_arrows()), zs(q.num_arrows());
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows()[i];
    int s = q.vertex_index(a.source), t = q.vertex_index(a.target);
    auto rm = solve(rad[t], m.action(a.id) * rad[s]);
    if (!rm) throw VerificationError("radical is not arrow-stable");
    rmaps[i] = std::move(*rm);
    zt[i] = QMatrix(tdims[t], tdims[s]);
    zs[i] = QMatrix(sdims[t], sdims[s]);
  }

  Representation top(m.algebra, tdims, std::move(zt));
  Representation radical(m.algebra, rdims, std::move(rmaps));
  Representation soc(m.algebra, sdims, std::move(zs));
  ModuleMap top_proj(m, top, proj);
  ModuleMap rad_incl(radical, m, rad);
  ModuleMap soc_incl(soc, m, socle);
  return {std::move(top), std::move(top_proj), std::move(radical),
          std::move(rad_incl), std::move(soc), std::move(soc_incl)};
}

int StandardSum::constant_path_slot(int block) const {
  // The constant path sorts first in its (v, v) group.
  return offset[block][rep.algebra->vertex_index(summands[block])];
}

StandardSum make_standard_sum(AlgebraPtr alg, StandardKind kind, std::vector<VertexId> vertices) {
  const Quiver& q = alg->quiver();
  int nv = q.num_vertices();
  StandardSum sum;
  sum.kind = kind;
  sum.summands = std::move(vertices);

  std::vector<Representation> parts;
  for (VertexId v : sum.summands) parts.push_back(standard_module(alg, kind, v));

  std::vector<int> dims(nv, 0);
  sum.offset.assign(parts.size(), std::vector<int>(nv, 0));
  for (size_t b = 0; b < parts.size(); ++b)
    for (int v = 0; v < nv; ++v) {
      sum.offset[b][v] = dims[v];
      dims[v] += parts[b].dims[v];
    }

  std::vector<QMatrix> maps(q.num_arrows());
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows()[i];
    int s = q.vertex_index(a.source), t = q.vertex_index(a.target);
    QMatrix m(dims[t], dims[s]);
    for (size_t b = 0; b < parts.size(); ++b) {
      const QMatrix& pm = parts[b].arrow_maps[i];
      for (int r = 0; r < pm.rows(); ++r)
        for (int c = 0; c < pm.cols(); ++c)
          m(sum.offset[b][t] + r, sum.offset[b][s] + c) = pm(r, c);
    }
    maps[i] = std::move(m);
  }
  sum.rep = Representation(std::move(alg), std::move(dims), std::move(maps));
  return sum;
}

SumSplit split_sum(const StandardSum& whole, const std::vector<int>& keep_blocks) {
  std::vector<VertexId> verts;
  for (int b : keep_blocks) verts.push_back(whole.summands[b]);
  StandardSum part = make_standard_sum(whole.rep.algebra, whole.kind, verts);

  int nv = whole.rep.algebra->num_vertices();
  std::vector<QMatrix> incl(nv), proj(nv);
  for (int v = 0; v < nv; ++v) {
    incl[v] = QMatrix(whole.rep.dims[v], part.rep.dims[v]);
    proj[v] = QMatrix(part.rep.dims[v], whole.rep.dims[v]);
    for (size_t k = 0; k < keep_blocks.size(); ++k) {
      int b = keep_blocks[k];
      int len = (b + 1 < whole.blocks() ? whole.offset[b + 1][v] : whole.rep.dims[v]) -
                whole.offset[b][v];
      for (int j = 0; j < len; ++j) {
        incl[v](whole.offset[b][v] + j, part.offset[k][v] + j) = 1;
        proj[v](part.offset[k][v] + j, whole.offset[b][v] + j) = 1;
      }
    }
  }
  ModuleMap incl_map(part.rep, whole.rep, std::move(incl));
  ModuleMap proj_map(whole.rep, part.rep, std::move(proj));
  return {std::move(part), std::move(incl_map), std::move(proj_map)};
}

ProjectiveCover projective_cover(const Representation& m) {
  if (m.is_zero()) throw InputError("projective_cover: zero module");
  const Quiver& q = m.algebra->quiver();
  int nv = q.num_vertices();

  // Lifts of a top basis: standard vectors completing the radical.
  std::vector<std::vector<int>> lifts(nv);
  for (int v = 0; v < nv; ++v) {
    VertexId vid = q.vertices()[v];
    std::vector<QMatrix> in_images{QMatrix(m.dims[v], 0)};
    for (ArrowId a : q.arrows_into(vid)) in_images.push_back(m.action(a));
    QMatrix rad = column_space_basis(QMatrix::hstack(in_images));
    lifts[v] = completion_indices(rad, m.dims[v]);
  }

  std::vector<VertexId> blocks;
  std::vector<int> block_lift;
  for (int v = 0; v < nv; ++v)
    for (int j : lifts[v]) {
      blocks.push_back(q.vertices()[v]);
      block_lift.push_back(j);
    }

  StandardSum p0 = make_standard_sum(m.algebra, StandardKind::projective, blocks);
  std::vector<QMatrix> map(nv);
  for (int w = 0; w < nv; ++w) map[w] = QMatrix(m.dims[w], p0.rep.dims[w]);
  for (size_t b = 0; b < blocks.size(); ++b) {
    VertexId v = blocks[b];
    for (int w = 0; w < nv; ++w) {
      VertexId wid = q.vertices()[w];
      auto paths = m.algebra->group(v, wid);
      for (size_t col = 0; col < paths.size(); ++col) {
        QMatrix pa = path_action(m, paths[col]);
        for (int r = 0; r < m.dims[w]; ++r)
          map[w](r, p0.offset[b][w] + static_cast<int>(col)) = pa(r, block_lift[b]);
      }
    }
  }
  ModuleMap cover(p0.rep, m, std::move(map));
  return {std::move(p0), std::move(cover)};
}

ProjectivePresentationData minimal_projective_presentation(const Representation& m) {
  if (m.is_zero()) throw InputError("minimal_projective_presentation: zero module");
  ProjectiveCover c0 = projective_cover(m);
  KernelCokernel kc = kernel_cokernel(c0.map);
  if (kc.kernel.is_zero()) {
    StandardSum p1 = make_standard_sum(m.algebra, StandardKind::projective, {});
    ModuleMap d = ModuleMap::zero(p1.rep, c0.p0.rep);
    return {std::move(p1), std::move(c0.p0), std::move(d), std::move(c0.map)};
  }
  ProjectiveCover c1 = projective_cover(kc.kernel);
  ModuleMap d = compose(kc.kernel_incl, c1.map);
  return {std::move(c1.p0), std::move(c0.p0), std::move(d), std::move(c0.map)};
}

InjectiveEnvelope injective_envelope(const Representation& m) {
  const Quiver& q = m.algebra->quiver();
  int nv = q.num_vertices();

  // Socle basis and functionals dual to it (vanishing on a deterministic
  // complement).
  std::vector<VertexId> blocks;
  std::vector<QMatrix> functionals;  // one row each
  for (int v = 0; v < nv; ++v) {
    VertexId vid = q.vertices()[v];
    std::vector<QMatrix> out_maps{QMatrix(0, m.dims[v])};
    for (ArrowId a : q.arrows_from(vid)) out_maps.push_back(m.action(a));
    QMatrix soc = nullspace_basis(QMatrix::vstack(out_maps));
    if (soc.cols() == 0) continue;
    std::vector<int> comp = completion_indices(soc, m.dims[v]);
    QMatrix f(m.dims[v], m.dims[v]);
    for (int j = 0; j < soc.cols(); ++j)
      for (int i = 0; i < m.dims[v]; ++i) f(i, j) = soc(i, j);
    for (size_t k = 0; k < comp.size(); ++k) f(comp[k], soc.cols() + static_cast<int>(k)) = 1;
    auto finv = inverse(f);
    if (!finv) throw VerificationError("socle completion is singular");
    for (int j = 0; j < soc.cols(); ++j) {
      blocks.push_back(vid);
      functionals.push_back(finv->submatrix(j, j + 1, 0, m.dims[v]));
    }
  }

  StandardSum i0 = make_standard_sum(m.algebra, StandardKind::injective, blocks);
  std::vector<QMatrix> map(nv);
  for (int w = 0; w < nv; ++w) map[w] = QMatrix(i0.rep.dims[w], m.dims[w]);
  for (size_t b = 0; b < blocks.size(); ++b) {
    VertexId v = blocks[b];
    for (int w = 0; w < nv; ++w) {
      VertexId wid = q.vertices()[w];
      auto paths = m.algebra->group(wid, v);
      for (size_t row = 0; row < paths.size(); ++row) {
        QMatrix r = functionals[b] * path_action(m, paths[row]);
        for (int c = 0; c < m.dims[w]; ++c)
          map[w](i0.offset[b][w] + static_cast<int>(row), c) = r(0, c);
      }
    }
  }
  ModuleMap embed(m, i0.rep, std::move(map));
  return {std::move(i0), std::move(embed)};
}

InjectiveCopresentationData minimal_injective_copresentation(const Representation& m) {
  if (m.is_zero()) throw InputError("minimal_injective_copresentation: zero module");
  InjectiveEnvelope e0 = injective_envelope(m);
  KernelCokernel kc = kernel_cokernel(e0.map);
  if (kc.cokernel.is_zero()) {
    StandardSum i1 = make_standard_sum(m.algebra, StandardKind::injective, {});
    ModuleMap f = ModuleMap::zero(e0.i0.rep, i1.rep);
    return {std::move(e0.i0), std::move(i1), std::move(e0.map), std::move(f)};
  }
  InjectiveEnvelope e1 = injective_envelope(kc.cokernel);
  ModuleMap f = compose(e1.map, kc.cokernel_proj);
  return {std::move(e0.i0), std::move(e1.i0), std::move(e0.map), std::move(f)};
}

int ext1_dim(AlgebraPtr alg, VertexId s, VertexId t) {
  if (!alg->quiver().has_vertex(s) || !alg->quiver().has_vertex(t))
    throw InputError("ext1_dim: unknown vertex");
  auto pres = minimal_projective_presentation(standard_module(alg, StandardKind::simple, s));
  int count = 0;
  for (VertexId v : pres.p1.summands)
    if (v == t) ++count;
  return count;
}

Quiver ext_quiver(AlgebraPtr alg) {
  const Quiver& q = alg->quiver();
  std::vector<Arrow> arrows;
  ArrowId next = 0;
  for (VertexId s : q.vertices()) {
    auto pres = minimal_projective_presentation(standard_module(alg, StandardKind::simple, s));
    std::vector<VertexId> targets(pres.p1.summands);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (VertexId t : targets) arrows.push_back({next++, s, t});
  }
  return Quiver(q.vertices(), std::move(arrows));
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw InputError("direct_sum: at least one summand required");
  AlgebraPtr alg = parts[0].algebra;
  for (const auto& p : parts)
    if (p.algebra != alg) throw InputError("direct_sum: algebra mismatch");
  const Quiver& q = alg->quiver();
  int nv = q.num_vertices();
  std::vector<int> dims(nv, 0);
  std::vector<std::vector<int>> offs(parts.size(), std::vector<int>(nv, 0));
  for (size_t b = 0; b < parts.size(); ++b)
    for (int v = 0; v < nv; ++v) {
      offs[b][v] = dims[v];
      dims[v] += parts[b].dims[v];
    }
  std::vector<QMatrix> maps(q.num_arrows());
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows()[i];
    int s = q.vertex_index(a.source), t = q.vertex_index(a.target);
    QMatrix m(dims[t], dims[s]);
    for (size_t b = 0; b < parts.size(); ++b) {
      const QMatrix& pm = parts[b].arrow_maps[i];
      for (int r = 0; r < pm.rows(); ++r)
        for (int c = 0; c < pm.cols(); ++c) m(offs[b][t] + r, offs[b][s] + c) = pm(r, c);
    }
    maps[i] = std::move(m);
  }
  return Representation(std::move(alg), std::move(dims), std::move(maps));
}

Representation dual_representation(const Representation& m, AlgebraPtr target) {
  const Quiver& q = m.algebra->quiver();
  const Quiver& tq = target->quiver();
  if (tq.vertices() != q.vertices() || tq.num_arrows() != q.num_arrows())
    throw InputError("dual_representation: target is not the opposite algebra");
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows()[i];
    const Arrow& b = tq.arrows()[i];
    if (a.id != b.id || a.source != b.target || a.target != b.source)
      throw InputError("dual_representation: target is not the opposite algebra");
  }
  std::vector<QMatrix> maps;
  for (const QMatrix& b : m.arrow_maps) maps.push_back(b.transpose());
  return Representation(std::move(target), m.dims, std::move(maps));
}

Representation restrict_along_deleted_vertex(const Representation& m, AlgebraPtr sub) {
  const Quiver& fq = m.algebra->quiver();
  const Quiver& sq = sub->quiver();
  std::vector<int> dims;
  for (VertexId v : sq.vertices()) dims.push_back(m.dims[fq.vertex_index(v)]);
  std::vector<QMatrix> maps;
  for (const Arrow& a : sq.arrows()) maps.push_back(m.action(a.id));
  return Representation(std::move(sub), std::move(dims), std::move(maps));
}

Representation zero_extend_along_deleted_vertex(const Representation& m, AlgebraPtr full) {
  const Quiver& fq = full->quiver();
  const Quiver& sq = m.algebra->quiver();
  std::vector<int> dims(fq.num_vertices(), 0);
  for (VertexId v : sq.vertices()) dims[fq.vertex_index(v)] = m.dims[sq.vertex_index(v)];
  std::vector<QMatrix> maps;
  for (const Arrow& a : fq.arrows()) {
    bool in_sub = sq.has_vertex(a.source) && sq.has_vertex(a.target);
    if (in_sub)
      maps.push_back(m.action(a.id));
    else
      maps.emplace_back(dims[fq.vertex_index(a.target)], dims[fq.vertex_index(a.source)]);
  }
  return Representation(std::move(full), std::move(dims), std::move(maps));
}

}  // namespace taukit
