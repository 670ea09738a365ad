#include "taukit/artranslation.hpp"

#include <algorithm>

namespace taukit {

namespace {

int group_pos(const MonomialAlgebra& alg, const Path& p) {
  auto idx = alg.basis_index(p);
  if (!idx) throw VerificationError("path expected in basis but missing");
  auto g = alg.group(p.source, p.target);
  return *idx - static_cast<int>(g.data() - alg.basis().data());
}

// True when `tail` equals the last tail.size() arrows of `arrows`.
bool ends_with(const std::vector<ArrowId>& arrows, const std::vector<ArrowId>& tail) {
  if (tail.size() > arrows.size()) return false;
  return std::equal(tail.rbegin(), tail.rend(), arrows.rbegin());
}

}  // namespace

PathMatrix extract_from_projective(const StandardSum& dom, const StandardSum& cod,
                                   const ModuleMap& d) {
  if (dom.kind != StandardKind::projective || cod.kind != StandardKind::projective)
    throw InputError("extract_from_projective: projective sums required");
  const MonomialAlgebra& alg = *d.domain.algebra;
  PathMatrix pm;
  pm.dom_vertices = dom.summands;
  pm.cod_vertices = cod.summands;
  pm.entries.assign(cod.blocks(), std::vector<std::vector<PathTerm>>(dom.blocks()));
  for (int b = 0; b < dom.blocks(); ++b) {
    VertexId vb = dom.summands[b];
    int vi = alg.vertex_index(vb);
    int col = dom.constant_path_slot(b);
    for (int c = 0; c < cod.blocks(); ++c) {
      auto paths = alg.group(cod.summands[c], vb);
      for (size_t k = 0; k < paths.size(); ++k) {
        Rat coeff = d.blocks[vi](cod.offset[c][vi] + static_cast<int>(k), col);
        if (coeff != 0) pm.entries[c][b].push_back({std::move(coeff), paths[k]});
      }
    }
  }
  return pm;
}

ModuleMap materialize_projective(const PathMatrix& pm, const StandardSum& dom,
                                 const StandardSum& cod) {
  if (dom.kind != StandardKind::projective || cod.kind != StandardKind::projective)
    throw InputError("materialize_projective: projective sums required");
  if (dom.summands != pm.dom_vertices || cod.summands != pm.cod_vertices)
    throw InputError("materialize_projective: block vertices do not match");
  const MonomialAlgebra& alg = *dom.rep.algebra;
  const Quiver& q = alg.quiver();
  int nv = q.num_vertices();

  std::vector<QMatrix> blocks(nv);
  for (int w = 0; w < nv; ++w) blocks[w] = QMatrix(cod.rep.dims[w], dom.rep.dims[w]);
  for (int b = 0; b < dom.blocks(); ++b) {
    VertexId vb = pm.dom_vertices[b];
    for (int w = 0; w < nv; ++w) {
      VertexId wid = q.vertices()[w];
      auto xs = alg.group(vb, wid);
      for (size_t xi = 0; xi < xs.size(); ++xi) {
        int col = dom.offset[b][w] + static_cast<int>(xi);
        for (int c = 0; c < cod.blocks(); ++c)
          for (const PathTerm& t : pm.entries[c][b]) {
            Path y = t.path;
            y.arrows.insert(y.arrows.end(), xs[xi].arrows.begin(), xs[xi].arrows.end());
            y.target = wid;
            if (!alg.is_basis_path(y)) continue;
            blocks[w](cod.offset[c][w] + group_pos(alg, y), col) += t.coeff;
          }
      }
    }
  }
  return ModuleMap(dom.rep, cod.rep, std::move(blocks));
}

ModuleMap materialize_injective(const PathMatrix& pm, const StandardSum& dom,
                                const StandardSum& cod) {
  if (dom.kind != StandardKind::injective || cod.kind != StandardKind::injective)
    throw InputError("materialize_injective: injective sums required");
  if (dom.summands != pm.dom_vertices || cod.summands != pm.cod_vertices)
    throw InputError("materialize_injective: block vertices do not match");
  const MonomialAlgebra& alg = *dom.rep.algebra;
  const Quiver& q = alg.quiver();
  int nv = q.num_vertices();

  std::vector<QMatrix> blocks(nv);
  for (int w = 0; w < nv; ++w) blocks[w] = QMatrix(cod.rep.dims[w], dom.rep.dims[w]);
  for (int b = 0; b < dom.blocks(); ++b) {
    VertexId vb = pm.dom_vertices[b];
    for (int w = 0; w < nv; ++w) {
      VertexId wid = q.vertices()[w];
      auto ps = alg.group(wid, vb);
      for (size_t pi = 0; pi < ps.size(); ++pi) {
        int col = dom.offset[b][w] + static_cast<int>(pi);
        for (int c = 0; c < cod.blocks(); ++c)
          for (const PathTerm& t : pm.entries[c][b]) {
            if (!ends_with(ps[pi].arrows, t.path.arrows)) continue;
            Path head{wid, pm.cod_vertices[c],
                      {ps[pi].arrows.begin(),
                       ps[pi].arrows.end() - static_cast<long>(t.path.arrows.size())}};
            blocks[w](cod.offset[c][w] + group_pos(alg, head), col) += t.coeff;
          }
      }
    }
  }
  return ModuleMap(dom.rep, cod.rep, std::move(blocks));
}

PathMatrix extract_from_injective(const StandardSum& dom, const StandardSum& cod,
                                  const ModuleMap& g) {
  if (dom.kind != StandardKind::injective || cod.kind != StandardKind::injective)
    throw InputError("extract_from_injective: injective sums required");
  const MonomialAlgebra& alg = *g.domain.algebra;
  const Quiver& q = alg.quiver();
  int nv = q.num_vertices();

  PathMatrix pm;
  pm.dom_vertices = dom.summands;
  pm.cod_vertices = cod.summands;
  pm.entries.assign(cod.blocks(), std::vector<std::vector<PathTerm>>(dom.blocks()));
  for (int b = 0; b < dom.blocks(); ++b) {
    VertexId vb = dom.summands[b];
    for (int c = 0; c < cod.blocks(); ++c) {
      VertexId uc = cod.summands[c];
      auto cand = alg.group(uc, vb);

      int eqs = 0;
      for (int w = 0; w < nv; ++w) {
        VertexId wid = q.vertices()[w];
        eqs += static_cast<int>(alg.group(wid, vb).size() * alg.group(wid, uc).size());
      }
      QMatrix sys(eqs, static_cast<int>(cand.size()));
      QMatrix rhs(eqs, 1);
      int row = 0;
      for (int w = 0; w < nv; ++w) {
        VertexId wid = q.vertices()[w];
        auto ps = alg.group(wid, vb);
        auto qs = alg.group(wid, uc);
        for (size_t pi = 0; pi < ps.size(); ++pi)
          for (size_t qi = 0; qi < qs.size(); ++qi) {
            for (size_t j = 0; j < cand.size(); ++j) {
              if (ps[pi].arrows.size() != qs[qi].arrows.size() + cand[j].arrows.size())
                continue;
              if (ends_with(ps[pi].arrows, cand[j].arrows) &&
                  std::equal(qs[qi].arrows.begin(), qs[qi].arrows.end(),
                             ps[pi].arrows.begin()))
                sys(row, static_cast<int>(j)) = 1;
            }
            rhs(row, 0) = g.blocks[w](cod.offset[c][w] + static_cast<int>(qi),
                                      dom.offset[b][w] + static_cast<int>(pi));
            ++row;
          }
      }
      auto sol = solve(sys, rhs);
      if (!sol)
        throw VerificationError(
            "extract_from_injective: map is not a combination of deletion operators");
      for (size_t j = 0; j < cand.size(); ++j)
        if ((*sol)(static_cast<int>(j), 0) != 0)
          pm.entries[c][b].push_back({(*sol)(static_cast<int>(j), 0), cand[j]});
    }
  }
  return pm;
}

NakayamaImage nu_on_projective_map(const StandardSum& p_dom, const StandardSum& p_cod,
                                   const ModuleMap& d) {
  PathMatrix pm = extract_from_projective(p_dom, p_cod, d);
  AlgebraPtr alg = d.domain.algebra;
  StandardSum idom = make_standard_sum(alg, StandardKind::injective, p_dom.summands);
  StandardSum icod = make_standard_sum(alg, StandardKind::injective, p_cod.summands);
  ModuleMap map = materialize_injective(pm, idom, icod);
  return {std::move(idom), std::move(icod), std::move(map)};
}

Representation tau(const Representation& m) {
  if (m.is_zero()) throw InputError("tau: zero module");
  auto pres = minimal_projective_presentation(m);
  if (pres.p1.rep.is_zero()) return zero_representation(m.algebra);
  NakayamaImage ni = nu_on_projective_map(pres.p1, pres.p0, pres.d);
  return kernel_cokernel(ni.map).kernel;
}

Representation tau_inverse(const Representation& m) {
  return tau_inverse(m, opposite_algebra(*m.algebra));
}

Representation tau_inverse(const Representation& m, AlgebraPtr op) {
  if (m.is_zero()) throw InputError("tau_inverse: zero module");
  Representation t = tau(dual_representation(m, std::move(op)));
  if (t.is_zero()) return zero_representation(m.algebra);
  return dual_representation(t, m.algebra);
}

Representation tau_inverse_from_copresentation(const Representation& m) {
  if (m.is_zero()) throw InputError("tau_inverse: zero module");
  auto cop = minimal_injective_copresentation(m);
  if (cop.i1.rep.is_zero()) return zero_representation(m.algebra);
  PathMatrix pm = extract_from_injective(cop.i0, cop.i1, cop.f);
  StandardSum pdom = make_standard_sum(m.algebra, StandardKind::projective, cop.i0.summands);
  StandardSum pcod = make_standard_sum(m.algebra, StandardKind::projective, cop.i1.summands);
  ModuleMap nf = materialize_projective(pm, pdom, pcod);
  return kernel_cokernel(nf).cokernel;
}

bool is_exact_sequence(const std::vector<ModuleMap>& maps) {
  if (maps.empty()) throw InputError("is_exact_sequence: empty sequence");
  int n = static_cast<int>(maps.size());
  for (int k = 0; k + 1 < n; ++k) {
    if (!(maps[k].codomain == maps[k + 1].domain))
      throw InputError("is_exact_sequence: objects do not chain");
    if (!compose(maps[k + 1], maps[k]).is_zero()) return false;
  }
  int nv = static_cast<int>(maps[0].domain.dims.size());
  for (int v = 0; v < nv; ++v) {
    std::vector<int> r(n);
    for (int k = 0; k < n; ++k) r[k] = maps[k].rank_at(v);
    for (int k = 0; k <= n; ++k) {
      int dim = k < n ? maps[k].domain.dims[v] : maps[n - 1].codomain.dims[v];
      int in_rank = k > 0 ? r[k - 1] : 0;
      int out_rank = k < n ? r[k] : 0;
      if (in_rank + out_rank != dim) return false;
    }
  }
  return true;
}

bool is_isomorphic(const Representation& m, const Representation& n) {
  if (m.algebra != n.algebra) throw InputError("is_isomorphic: algebra mismatch");
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  std::vector<ModuleMap> basis = hom_basis(m, n);
  if (basis.empty()) return false;

  // The invertibility locus is detected by a determinant polynomial of total
  // degree at most total_dim(), so a grid with total_dim() + 1 values per
  // coefficient contains a witness whenever one exists.
  int k = static_cast<int>(basis.size());
  long long base = m.total_dim() + 1;
  long long combos = 1;
  for (int i = 0; i < k; ++i) {
    combos *= base;
    if (combos > 2'000'000)
      throw VerificationError("is_isomorphic: coefficient grid too large");
  }

  int nv = static_cast<int>(m.dims.size());
  std::vector<long long> c(k, 0);
  for (long long step = 1; step < combos; ++step) {
    int pos = 0;
    while (true) {
      if (++c[pos] < base) break;
      c[pos] = 0;
      ++pos;
    }
    bool invertible = true;
    for (int v = 0; v < nv && invertible; ++v) {
      QMatrix cand(n.dims[v], m.dims[v]);
      for (int i = 0; i < k; ++i) {
        if (c[i] == 0) continue;
        Rat coeff(c[i]);
        for (int r = 0; r < cand.rows(); ++r)
          for (int col = 0; col < cand.cols(); ++col)
            cand(r, col) += coeff * basis[i].blocks[v](r, col);
      }
      invertible = rank(cand) == m.dims[v];
    }
    if (invertible) return true;
  }
  return false;
}

FiveTermReport five_term_check(const Representation& m) {
  FiveTermReport report;
  if (m.is_zero()) {
    report.reason = "zero module";
    return report;
  }
  auto cop = minimal_injective_copresentation(m);
  if (cop.i0.blocks() != 1) {
    report.reason = "injective envelope is not indecomposable";
    return report;
  }
  if (cop.i1.blocks() < 2) {
    report.reason = "second injective term has fewer than two blocks";
    return report;
  }
  report.applicable = true;

  AlgebraPtr alg = m.algebra;
  AlgebraPtr op = opposite_algebra(*alg);
  const ModuleMap& f = cop.f;

  PathMatrix pmf = extract_from_injective(cop.i0, cop.i1, f);
  StandardSum pdom = make_standard_sum(alg, StandardKind::projective, cop.i0.summands);
  StandardSum pcod = make_standard_sum(alg, StandardKind::projective, cop.i1.summands);
  ModuleMap nf = materialize_projective(pmf, pdom, pcod);

  KernelCokernel kc_f = kernel_cokernel(f);
  KernelCokernel kc_nf = kernel_cokernel(nf);

  for (int j = 0; j < cop.i1.blocks(); ++j) {
    std::vector<int> rest;
    for (int b = 0; b < cop.i1.blocks(); ++b)
      if (b != j) rest.push_back(b);

    FiveTermSplitReport sr;
    sr.split_block = j;
    sr.block_vertex = cop.i1.summands[j];

    {
      SumSplit drop = split_sum(cop.i1, rest);
      SumSplit keep = split_sum(cop.i1, {j});
      ModuleMap fp = compose(drop.proj, f);
      ModuleMap fpp = compose(keep.proj, f);
      KernelCokernel kc_fp = kernel_cokernel(fp);
      ModuleMap g1 = factor_through_inclusion(kc_fp.kernel_incl, kc_f.kernel_incl);
      ModuleMap g2 = compose(fpp, kc_fp.kernel_incl);
      ModuleMap g3 = compose(kc_f.cokernel_proj, keep.incl);
      ModuleMap g4 = descend_along_surjection(kc_f.cokernel_proj,
                                              compose(kc_fp.cokernel_proj, drop.proj));
      sr.seq1_exact = is_exact_sequence({g1, g2, g3, g4});

      const Representation& mk = kc_f.kernel;
      const Representation& nk = kc_fp.kernel;
      sr.m_indecomposable = structural_series(mk).socle.total_dim() == 1;
      sr.n_indecomposable = structural_series(nk).socle.total_dim() == 1;
      sr.m_non_injective = !tau_inverse(mk, op).is_zero();
      sr.n_non_injective = !tau_inverse(nk, op).is_zero();
      sr.endpoints_non_isomorphic = !is_isomorphic(mk, nk);
    }

    {
      SumSplit drop = split_sum(pcod, rest);
      SumSplit keep = split_sum(pcod, {j});
      ModuleMap fp = compose(drop.proj, nf);
      ModuleMap fpp = compose(keep.proj, nf);
      KernelCokernel kc_fp = kernel_cokernel(fp);
      ModuleMap g1 = factor_through_inclusion(kc_fp.kernel_incl, kc_nf.kernel_incl);
      ModuleMap g2 = compose(fpp, kc_fp.kernel_incl);
      ModuleMap g3 = compose(kc_nf.cokernel_proj, keep.incl);
      ModuleMap g4 = descend_along_surjection(kc_nf.cokernel_proj,
                                              compose(kc_fp.cokernel_proj, drop.proj));
      sr.seq2_exact = is_exact_sequence({g1, g2, g3, g4});
    }

    report.splits.push_back(std::move(sr));
  }
  return report;
}

}  // namespace taukit
