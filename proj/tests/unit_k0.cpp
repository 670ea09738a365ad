#include "doctest.h"

#include <map>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "taukit/k0.hpp"

using namespace taukit;

namespace {

IntMatrix imat(const std::vector<std::vector<Int>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()),
              rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m(i, j) = rows[i][static_cast<size_t>(j)];
  return m;
}

}  // namespace

TEST_CASE("cartan fixtures") {
  CHECK(two_cycle()->cartan_matrix() == imat({{1, 1}, {1, 2}}));
  CHECK(hereditary_a2()->cartan_matrix() == imat({{1, 0}, {1, 1}}));
  Quiver q({1, 2}, {{1, 1, 2}, {2, 2, 1}});
  AlgebraPtr singular =
      make_monomial_algebra(q, {Path{1, 1, {1, 2}}, Path{2, 2, {2, 1}}});
  CHECK(singular->dim() == 4);
  CHECK(singular->cartan_matrix() == imat({{1, 1}, {1, 1}}));
}

TEST_CASE("coxeter matrices at both signs") {
  AlgebraPtr a = two_cycle();
  CoxeterResult plus = coxeter_matrix(*a, CoxeterSign::plus);
  REQUIRE(plus.cartan_invertible);
  CHECK(plus.integral);
  CHECK(plus.matrix.is_identity());

  AlgebraPtr h = hereditary_a2();
  ValidatedCoxeter vc = validated_coxeter(h);
  REQUIRE(vc.valid);
  CHECK(vc.sign == CoxeterSign::minus);
  REQUIRE(vc.result.integral);
  std::optional<IntMatrix> vi = to_integer(vc.result.matrix);
  REQUIRE(vi.has_value());
  CHECK(*vi == imat({{0, -1}, {1, -1}}));

  Quiver q({1, 2}, {{1, 1, 2}, {2, 2, 1}});
  AlgebraPtr singular =
      make_monomial_algebra(q, {Path{1, 1, {1, 2}}, Path{2, 2, {2, 1}}});
  CHECK_FALSE(coxeter_matrix(*singular, CoxeterSign::plus).cartan_invertible);
  CHECK_FALSE(validated_coxeter(singular).valid);
}

TEST_CASE("constraint feasibility solves row by row") {
  CHECK(tau_map_feasible({}, 3) == IntMatrix(3, 3));
  std::optional<IntMatrix> pinned =
      tau_map_feasible({{{1, 0}, {0, 1}}}, 2);
  REQUIRE(pinned.has_value());
  CHECK(*pinned == imat({{0, 0}, {1, 0}}));
  CHECK(tau_map_feasible({{{2}, {1}}}, 1) == std::nullopt);
  CHECK(tau_map_feasible({{{1, 0}, {0, 1}}, {{1, 0}, {1, 0}}}, 2) == std::nullopt);
}

TEST_CASE("feasibility agrees with the walk matrix on Nakayama constraints") {
  for (const auto& inst : corpus::linear_corpus(4, 4)) {
    const MonomialAlgebra& alg = *inst.alg;
    int n = alg.num_vertices();
    std::vector<TauMapConstraint> cons;
    for (const IndecDescriptor& d : enumerate_indecomposables(inst.k)) {
      if (d.projective) continue;
      auto t = closed_form_tau(inst.k, d.top, d.length);
      REQUIRE(t.has_value());
      cons.push_back({indec_dim_vector(inst.k, alg, d.top, d.length),
                      indec_dim_vector(inst.k, alg, t->top, t->length)});
    }
    std::optional<IntMatrix> solved = tau_map_feasible(cons, n);
    REQUIRE(solved.has_value());
    IntMatrix walk = nakayama_tau_matrix(inst.k, alg);
    for (VertexId v : alg.quiver().vertices()) {
      if (inst.k.c[inst.k.position(v)] == 1) continue;  // projective simple: free column
      int j = alg.vertex_index(v);
      for (int i = 0; i < n; ++i) CHECK((*solved)(i, j) == walk(i, j));
    }
  }
}

TEST_CASE("walk matrix columns and free assignments") {
  AlgebraPtr a = two_cycle();
  KupischSeries k = kupisch_series(*a);
  CHECK(nakayama_tau_matrix(k, *a) == imat({{0, 1}, {1, 0}}));

  AlgebraPtr pt = algebra_from_kupisch(false, {1});
  KupischSeries kp = kupisch_series(*pt);
  CHECK(nakayama_tau_matrix(kp, *pt) == imat({{0}}));
  CHECK(nakayama_tau_matrix(kp, *pt, {{1, {7}}}) == imat({{7}}));
  CHECK_THROWS_AS(nakayama_tau_matrix(kp, *pt, {{1, {1, 2}}}), InputError);
  CHECK_THROWS_AS(nakayama_tau_matrix(k, *a, {{1, {0, 0}}}), InputError);
}

TEST_CASE("permutation certificates") {
  IntMatrix swap = imat({{0, 1}, {1, 0}});
  PermutationCheck ok = permutation_check(swap, swap);
  CHECK(ok.ok);
  CHECK(ok.perm == std::vector<int>{1, 0});
  CHECK(ok.issue.empty());

  IntMatrix id = imat({{1, 0}, {0, 1}});
  PermutationCheck idok = permutation_check(id, id);
  CHECK(idok.ok);
  CHECK(idok.perm == std::vector<int>{0, 1});

  IntMatrix shear = imat({{1, 1}, {0, 1}});
  IntMatrix shear_inv = imat({{1, -1}, {0, 1}});
  PermutationCheck neg = permutation_check(shear, shear_inv);
  CHECK_FALSE(neg.ok);
  CHECK(neg.issue.find("negative") != std::string::npos);
  PermutationCheck bad = permutation_check(shear, id);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.issue.empty());
  CHECK_FALSE(permutation_check(swap, IntMatrix(3, 3)).ok);
}

TEST_CASE("inverse map construction checks both products") {
  AlgebraPtr a = two_cycle();
  IntMatrix swap = imat({{0, 1}, {1, 0}});
  TauInverseMapResult res = invert_to_tau_inverse_map(swap, a);
  REQUIRE(res.matrix.has_value());
  CHECK(res.issue.empty());
  CHECK(*res.matrix == swap);

  TauInverseMapResult bad = invert_to_tau_inverse_map(imat({{0, 2}, {2, 0}}), a);
  CHECK_FALSE(bad.matrix.has_value());
  CHECK_FALSE(bad.issue.empty());

  CHECK_THROWS_AS(invert_to_tau_inverse_map(IntMatrix::identity(3), a), InputError);
  CHECK_THROWS_AS(invert_to_tau_inverse_map(IntMatrix::identity(2), hereditary_a2()),
                  InputError);
}

TEST_CASE("decision worked examples") {
  TauMapVerdict two = decide_tau_map(two_cycle());
  CHECK(two.status == TauMapStatus::exists);
  REQUIRE(two.witness.has_value());
  CHECK(*two.witness == imat({{0, 1}, {1, 0}}));
  REQUIRE(two.components.size() == 1);
  CHECK(two.components[0].branch == "cyclic-nakayama");

  TauMapVerdict blocked = decide_tau_map(two_cycle_with_source());
  CHECK(blocked.status == TauMapStatus::not_exists);
  CHECK_FALSE(blocked.witness.has_value());
  REQUIRE(blocked.components.size() == 1);
  CHECK(blocked.components[0].branch == "cyclic-not-nakayama");

  TauMapVerdict heredit = decide_tau_map(hereditary_a2());
  CHECK(heredit.status == TauMapStatus::exists);
  REQUIRE(heredit.witness.has_value());
  CHECK(*heredit.witness == imat({{0, -1}, {1, -1}}));
  CHECK(heredit.components[0].branch == "acyclic-no-relations");

  TauMapVerdict walkline = decide_tau_map(algebra_from_kupisch(false, {2, 2, 1}));
  CHECK(walkline.status == TauMapStatus::exists);
  REQUIRE(walkline.witness.has_value());
  CHECK(walkline.components[0].branch == "acyclic-nakayama");
  CHECK(*walkline.witness == imat({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));

  TauMapVerdict open = decide_tau_map(non_nakayama_bound());
  CHECK(open.status == TauMapStatus::undecided);
  CHECK_FALSE(open.witness.has_value());
  CHECK(open.components[0].branch == "acyclic-with-relations");
}

TEST_CASE("decision combines weak components") {
  Quiver q({1, 2, 3, 4}, {{1, 1, 2}, {2, 2, 1}, {3, 3, 4}});
  AlgebraPtr mixed = make_monomial_algebra(q, {Path{1, 1, {1, 2}}});
  TauMapVerdict v = decide_tau_map(mixed);
  CHECK(v.status == TauMapStatus::exists);
  REQUIRE(v.components.size() == 2);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == imat({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, -1}}));

  Quiver q2({1, 2, 3, 4, 5},
            {{1, 1, 2}, {2, 2, 1}, {3, 3, 4}, {4, 4, 3}, {5, 5, 4}});
  AlgebraPtr veto = make_monomial_algebra(
      q2, {Path{1, 1, {1, 2}}, Path{3, 3, {3, 4}}, Path{4, 4, {4, 3}}});
  TauMapVerdict nv = decide_tau_map(veto);
  CHECK(nv.status == TauMapStatus::not_exists);
  CHECK_FALSE(nv.witness.has_value());

  Quiver q3({1, 2, 3, 11, 12}, {{1, 1, 2}, {2, 2, 3}, {3, 1, 3}, {4, 11, 12}, {5, 12, 11}});
  AlgebraPtr und = make_monomial_algebra(
      q3, {Path{1, 3, {1, 2}}, Path{11, 11, {4, 5}}});
  TauMapVerdict uv = decide_tau_map(und);
  CHECK(uv.status == TauMapStatus::undecided);
  CHECK_FALSE(uv.witness.has_value());
}

TEST_CASE("an existing map forces Nakayama on cyclic components") {
  for (const AlgebraPtr& alg : corpus::random_corpus(60, 41)) {
    TauMapVerdict v = decide_tau_map(alg);
    if (v.status != TauMapStatus::exists) continue;
    for (const ComponentVerdict& cv : v.components) {
      if (cv.branch == "cyclic-nakayama") {
        AlgebraPtr sub = restrict_to_vertices(*alg, cv.vertices);
        CHECK(sub->is_nakayama());
      }
      CHECK(cv.branch != "cyclic-not-nakayama");
    }
  }
}
