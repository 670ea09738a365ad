#include "taukit/nakayama.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace taukit {

int KupischSeries::position(VertexId v) const {
  for (int i = 0; i < n(); ++i)
    if (order[i] == v) return i;
  throw InputError("kupisch series: unknown vertex " + std::to_string(v));
}

std::optional<VertexId> KupischSeries::successor(VertexId v) const {
  int i = position(v);
  if (cyclic) return order[(i + 1) % n()];
  if (i + 1 < n()) return order[i + 1];
  return std::nullopt;
}

std::optional<VertexId> KupischSeries::predecessor(VertexId v) const {
  int i = position(v);
  if (cyclic) return order[(i + n() - 1) % n()];
  if (i > 0) return order[i - 1];
  return std::nullopt;
}

KupischSeries kupisch_series(const MonomialAlgebra& alg) {
  const Quiver& q = alg.quiver();
  if (q.num_vertices() == 0) throw InputError("kupisch_series: empty quiver");
  if (q.components().size() != 1) throw InputError("kupisch_series: quiver is not connected");
  if (!alg.is_nakayama()) throw InputError("kupisch_series: algebra is not Nakayama");

  KupischSeries k;
  VertexId start;
  if (q.sinks().empty()) {
    k.cyclic = true;
    start = q.vertices().front();
  } else {
    auto sources = q.sources();
    if (sources.size() != 1) throw VerificationError("connected line with several sources");
    start = sources.front();
  }

  std::set<VertexId> seen;
  VertexId cur = start;
  for (int i = 0; i < q.num_vertices(); ++i) {
    if (!seen.insert(cur).second) throw VerificationError("walk revisits a vertex early");
    k.order.push_back(cur);
    int dim = 0;
    for (VertexId w : q.vertices()) dim += static_cast<int>(alg.group(cur, w).size());
    k.c.push_back(dim);
    auto out = q.arrows_from(cur);
    if (!out.empty()) cur = q.arrow(out[0]).target;
  }
  if (static_cast<int>(k.order.size()) != q.num_vertices())
    throw VerificationError("walk does not cover the quiver");
  return k;
}

IndecDescriptor describe_indec(const KupischSeries& k, VertexId top, int length) {
  int i = k.position(top);
  if (length < 1 || length > k.c[i])
    throw InputError("no indecomposable with top " + std::to_string(top) + " and length " +
                     std::to_string(length));
  IndecDescriptor d;
  d.top = top;
  d.length = length;
  d.projective = length == k.c[i];
  d.simple = length == 1;
  auto pred = k.predecessor(top);
  d.injective = !pred || k.c[k.position(*pred)] <= length;
  return d;
}

std::vector<IndecDescriptor> enumerate_indecomposables(const KupischSeries& k) {
  std::vector<IndecDescriptor> out;
  for (int i = 0; i < k.n(); ++i)
    for (int l = 1; l <= k.c[i]; ++l) out.push_back(describe_indec(k, k.order[i], l));
  return out;
}

std::vector<Int> indec_dim_vector(const KupischSeries& k, const MonomialAlgebra& alg,
                                  VertexId top, int length) {
  describe_indec(k, top, length);
  std::vector<Int> d(alg.num_vertices(), 0);
  VertexId cur = top;
  for (int t = 0; t < length; ++t) {
    ++d[alg.vertex_index(cur)];
    if (t + 1 < length) {
      auto next = k.successor(cur);
      if (!next) throw VerificationError("walk shorter than module length");
      cur = *next;
    }
  }
  return d;
}

std::optional<IndecDescriptor> closed_form_tau(const KupischSeries& k, VertexId top, int length) {
  IndecDescriptor d = describe_indec(k, top, length);
  if (d.projective) return std::nullopt;
  return describe_indec(k, *k.successor(top), length);
}

std::optional<IndecDescriptor> closed_form_tau_inverse(const KupischSeries& k, VertexId top,
                                                       int length) {
  IndecDescriptor d = describe_indec(k, top, length);
  if (d.injective) return std::nullopt;
  return describe_indec(k, *k.predecessor(top), length);
}

Representation nakayama_module(AlgebraPtr alg, const KupischSeries& k, VertexId top, int length) {
  describe_indec(k, top, length);
  const Quiver& q = alg->quiver();
  int nv = q.num_vertices();

  std::vector<VertexId> walk{top};
  for (int t = 1; t < length; ++t) walk.push_back(*k.successor(walk.back()));

  std::vector<int> dims(nv, 0), local(length, 0);
  for (int t = 0; t < length; ++t) local[t] = dims[alg->vertex_index(walk[t])]++;

  std::vector<QMatrix> maps(q.num_arrows());
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrows()[i];
    maps[i] = QMatrix(dims[q.vertex_index(a.target)], dims[q.vertex_index(a.source)]);
  }
  for (int t = 0; t + 1 < length; ++t) {
    auto out = q.arrows_from(walk[t]);
    if (out.size() != 1) throw VerificationError("walk vertex without unique out-arrow");
    maps[q.arrow_index(out[0])](local[t + 1], local[t]) = 1;
  }
  return Representation(std::move(alg), std::move(dims), std::move(maps));
}

bool isomorphic_to_indec(const Representation& m, VertexId top, int length) {
  if (m.total_dim() != length) return false;
  Representation t = structural_series(m).top;
  int vi = m.algebra->vertex_index(top);
  for (int v = 0; v < static_cast<int>(t.dims.size()); ++v)
    if (t.dims[v] != (v == vi ? 1 : 0)) return false;
  return true;
}

AlgebraPtr algebra_from_kupisch(bool cyclic, const std::vector<int>& c) {
  int n = static_cast<int>(c.size());
  if (n == 0) throw InputError("kupisch series is empty");
  if (cyclic) {
    for (int i = 0; i < n; ++i) {
      if (c[i] < 2) throw InputError("cyclic series needs every value >= 2");
      if (c[(i + 1) % n] < c[i] - 1) throw InputError("series drops too fast");
    }
  } else {
    if (c[n - 1] != 1) throw InputError("line series must end with 1");
    for (int i = 0; i + 1 < n; ++i) {
      if (c[i] < 2) throw InputError("line series needs interior values >= 2");
      if (c[i + 1] < c[i] - 1) throw InputError("series drops too fast");
      if (c[i] > n - i) throw InputError("series value exceeds the remaining walk");
    }
  }

  std::vector<VertexId> verts;
  for (int i = 1; i <= n; ++i) verts.push_back(i);
  std::vector<Arrow> arrows;
  int na = cyclic ? n : n - 1;
  for (int i = 0; i < na; ++i) arrows.push_back({i, i + 1, cyclic ? (i + 1) % n + 1 : i + 2});
  Quiver q(verts, arrows);

  std::vector<Path> rels;
  for (int i = 0; i < n; ++i) {
    if (!cyclic && i + c[i] > n - 1) continue;
    std::vector<ArrowId> as;
    for (int t = 0; t < c[i]; ++t) as.push_back(cyclic ? (i + t) % n : i + t);
    VertexId tgt = cyclic ? (i + c[i]) % n + 1 : i + c[i] + 1;
    rels.push_back({i + 1, tgt, std::move(as)});
  }
  return make_monomial_algebra(std::move(q), std::move(rels));
}

}  // namespace taukit
