#include "taukit/k0.hpp"

#include <algorithm>
#include <utility>

#include "taukit/artranslation.hpp"

namespace taukit {

namespace {

QMatrix column_of(const std::vector<Int>& v) {
  QMatrix m(static_cast<int>(v.size()), 1);
  for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
  return m;
}

bool is_permutation(const IntMatrix& m) {
  if (m.rows != m.cols) return false;
  std::vector<int> col_count(m.cols, 0);
  for (int r = 0; r < m.rows; ++r) {
    int row_count = 0;
    for (int c = 0; c < m.cols; ++c) {
      if (m(r, c) == 1) {
        ++row_count;
        ++col_count[c];
      } else if (m(r, c) != 0) {
        return false;
      }
    }
    if (row_count != 1) return false;
  }
  for (int c : col_count)
    if (c != 1) return false;
  return true;
}

}  // namespace

CoxeterResult coxeter_matrix(const MonomialAlgebra& alg, CoxeterSign sign) {
  CoxeterResult res;
  QMatrix c = alg.cartan_matrix().to_rational();
  auto cinv = inverse(c);
  if (!cinv) return res;
  res.cartan_invertible = true;
  res.matrix = c.transpose() * *cinv;
  if (sign == CoxeterSign::minus) res.matrix = QMatrix(c.rows(), c.cols()) - res.matrix;
  res.integral = res.matrix.is_integral();
  return res;
}

ValidatedCoxeter validated_coxeter(AlgebraPtr alg) {
  ValidatedCoxeter out;

  std::vector<std::pair<QMatrix, QMatrix>> pins;
  for (VertexId v : alg->quiver().vertices()) {
    int proj_dim = 0;
    for (VertexId w : alg->quiver().vertices())
      proj_dim += static_cast<int>(alg->group(v, w).size());
    if (proj_dim == 1) continue;  // projective simple, unconstrained
    Representation t = tau(standard_module(alg, StandardKind::simple, v));
    std::vector<Int> from(alg->num_vertices(), 0);
    from[alg->vertex_index(v)] = 1;
    pins.emplace_back(column_of(from), column_of(t.dim_vector()));
  }

  for (CoxeterSign s : {CoxeterSign::plus, CoxeterSign::minus}) {
    CoxeterResult r = coxeter_matrix(*alg, s);
    if (!r.cartan_invertible) break;
    bool ok = true;
    for (const auto& [from, to] : pins)
      if (!(r.matrix * from == to)) {
        ok = false;
        break;
      }
    if (ok) {
      out.sign = s;
      out.valid = true;
      out.result = std::move(r);
      return out;
    }
  }
  out.result = coxeter_matrix(*alg, CoxeterSign::plus);
  return out;
}

std::optional<IntMatrix> tau_map_feasible(const std::vector<TauMapConstraint>& constraints,
                                          int n) {
  for (const auto& c : constraints)
    if (static_cast<int>(c.from.size()) != n || static_cast<int>(c.to.size()) != n)
      throw InputError("tau_map_feasible: constraint length mismatch");
  if (constraints.empty()) return IntMatrix(n, n);

  std::vector<std::vector<Int>> d;
  for (const auto& c : constraints) d.push_back(c.from);
  IntMatrix x(n, n);
  for (int r = 0; r < n; ++r) {
    std::vector<Int> b;
    for (const auto& c : constraints) b.push_back(c.to[r]);
    auto row = solve_integer(d, b);
    if (!row) return std::nullopt;
    for (int j = 0; j < n; ++j) x(r, j) = (*row)[j];
  }
  return x;
}

IntMatrix nakayama_tau_matrix(const KupischSeries& k, const MonomialAlgebra& alg,
                              const std::map<VertexId, std::vector<Int>>& x) {
  int n = alg.num_vertices();
  for (const auto& [v, col] : x) {
    if (k.c[k.position(v)] != 1)
      throw InputError("nakayama_tau_matrix: vertex " + std::to_string(v) +
                       " carries a non-projective simple");
    if (static_cast<int>(col.size()) != n)
      throw InputError("nakayama_tau_matrix: assigned column length mismatch");
  }
  IntMatrix m(n, n);
  for (VertexId v : k.order) {
    if (k.c[k.position(v)] == 1) {
      auto it = x.find(v);
      if (it == x.end()) continue;  // unconstrained column stays zero
      for (int r = 0; r < n; ++r) m(r, alg.vertex_index(v)) = it->second[r];
    } else {
      m(alg.vertex_index(*k.successor(v)), alg.vertex_index(v)) = 1;
    }
  }
  return m;
}

TauMapVerdict decide_tau_map(AlgebraPtr alg) {
  TauMapVerdict verdict;
  int n = alg->num_vertices();

  for (const auto& comp : alg->quiver().components()) {
    ComponentVerdict cv;
    cv.vertices = comp;
    AlgebraPtr sub = restrict_to_vertices(*alg, comp);

    if (!sub->quiver().is_acyclic()) {
      if (sub->is_nakayama()) {
        KupischSeries k = kupisch_series(*sub);
        cv.branch = "cyclic-nakayama";
        cv.status = TauMapStatus::exists;
        cv.witness = nakayama_tau_matrix(k, *sub);
      } else {
        cv.branch = "cyclic-not-nakayama";
        cv.status = TauMapStatus::not_exists;
      }
    } else if (sub->relations().empty()) {
      ValidatedCoxeter vc = validated_coxeter(sub);
      if (!vc.valid || !vc.result.integral)
        throw VerificationError("acyclic relation-free component rejected its Coxeter matrix");
      auto w = to_integer(vc.result.matrix);
      if (!w) throw VerificationError("integral Coxeter matrix failed integer conversion");
      cv.branch = "acyclic-no-relations";
      cv.status = TauMapStatus::exists;
      cv.witness = std::move(*w);
    } else if (sub->is_nakayama()) {
      KupischSeries k = kupisch_series(*sub);
      cv.branch = "acyclic-nakayama";
      cv.status = TauMapStatus::exists;
      cv.witness = nakayama_tau_matrix(k, *sub);
    } else {
      cv.branch = "acyclic-with-relations";
      cv.status = TauMapStatus::undecided;
    }
    verdict.components.push_back(std::move(cv));
  }

  verdict.status = TauMapStatus::exists;
  for (const auto& cv : verdict.components) {
    if (cv.status == TauMapStatus::not_exists) {
      verdict.status = TauMapStatus::not_exists;
      break;
    }
    if (cv.status == TauMapStatus::undecided) verdict.status = TauMapStatus::undecided;
  }

  if (verdict.status == TauMapStatus::exists) {
    IntMatrix w(n, n);
    for (const auto& cv : verdict.components)
      for (size_t i = 0; i < cv.vertices.size(); ++i)
        for (size_t j = 0; j < cv.vertices.size(); ++j)
          w(alg->vertex_index(cv.vertices[i]), alg->vertex_index(cv.vertices[j])) =
              (*cv.witness)(static_cast<int>(i), static_cast<int>(j));
    verdict.witness = std::move(w);
  }
  return verdict;
}

TauInverseMapResult invert_to_tau_inverse_map(const IntMatrix& phi, AlgebraPtr alg) {
  int n = alg->num_vertices();
  if (phi.rows != n || phi.cols != n)
    throw InputError("invert_to_tau_inverse_map: matrix size does not match the vertex count");
  if (!alg->quiver().sources().empty())
    throw InputError("invert_to_tau_inverse_map: quiver has a source, so some simple is injective");

  TauInverseMapResult res;
  AlgebraPtr op = opposite_algebra(*alg);
  IntMatrix psi(n, n);
  for (VertexId v : alg->quiver().vertices()) {
    Representation ti = tau_inverse(standard_module(alg, StandardKind::simple, v), op);
    if (ti.is_zero()) {
      res.issue = "inverse translation vanishes on the non-injective simple at vertex " +
                  std::to_string(v);
      return res;
    }
    std::vector<Int> col = ti.dim_vector();
    for (int r = 0; r < n; ++r) psi(r, alg->vertex_index(v)) = col[r];
  }
  if (!(psi * phi).is_identity() || !(phi * psi).is_identity()) {
    res.issue = "columns built from the inverse translation do not invert the given matrix";
    return res;
  }
  res.matrix = std::move(psi);
  return res;
}

PermutationCheck permutation_check(const IntMatrix& a, const IntMatrix& b) {
  PermutationCheck out;
  if (a.rows != a.cols || b.rows != b.cols || a.rows != b.rows) {
    out.issue = "matrices must be square and of equal size";
    return out;
  }
  for (const IntMatrix* m : {&a, &b})
    for (int r = 0; r < m->rows; ++r)
      for (int c = 0; c < m->cols; ++c)
        if ((*m)(r, c) < 0) {
          out.issue = "negative entry at (" + std::to_string(r) + ", " + std::to_string(c) +
                      ") of the " + (m == &a ? "first" : "second") + " matrix";
          return out;
        }
  IntMatrix p = a * b;
  for (int r = 0; r < p.rows; ++r)
    for (int c = 0; c < p.cols; ++c)
      if (p(r, c) != (r == c ? 1 : 0)) {
        out.issue = "product entry (" + std::to_string(r) + ", " + std::to_string(c) +
                    ") is " + std::to_string(p(r, c));
        return out;
      }
  for (const IntMatrix* m : {&a, &b})
    if (!is_permutation(*m)) {
      out.issue = std::string(m == &a ? "first" : "second") + " factor is not a permutation matrix";
      return out;
    }
  out.perm.resize(a.cols);
  for (int c = 0; c < a.cols; ++c)
    for (int r = 0; r < a.rows; ++r)
      if (a(r, c) == 1) out.perm[c] = r;
  out.ok = true;
  return out;
}

}  // namespace taukit
