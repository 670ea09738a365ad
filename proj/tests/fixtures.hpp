#pragma once

#include "taukit/algebra.hpp"
#include "taukit/repr.hpp"

// Hand-built algebras shared across the suites.

// Arrows a: 1 -> 2 and b: 2 -> 1 with the words (ab) and (bab) killed; the
// second generator is redundant. Basis e1, e2, a, b, ba.
inline taukit::AlgebraPtr two_cycle() {
  using namespace taukit;
  Quiver q({1, 2}, {{1, 1, 2}, {2, 2, 1}});
  return make_monomial_algebra(q, {Path{1, 1, {1, 2}}, Path{2, 1, {2, 1, 2}}});
}

// Path algebra of 1 -> 2.
inline taukit::AlgebraPtr hereditary_a2() {
  using namespace taukit;
  return make_monomial_algebra(Quiver({1, 2}, {{1, 1, 2}}), {});
}

// Two arrows into a common sink: a: 2 -> 1, b: 3 -> 1.
inline taukit::AlgebraPtr star_in() {
  using namespace taukit;
  return make_monomial_algebra(Quiver({1, 2, 3}, {{1, 2, 1}, {2, 3, 1}}), {});
}

// Two-cycle on 1, 2 with both length-2 words killed, plus a source 3 -> 2.
inline taukit::AlgebraPtr two_cycle_with_source() {
  using namespace taukit;
  Quiver q({1, 2, 3}, {{1, 1, 2}, {2, 2, 1}, {3, 3, 2}});
  return make_monomial_algebra(q, {Path{1, 1, {1, 2}}, Path{2, 2, {2, 1}}});
}

// Acyclic, bound, not Nakayama: 1 -> 2 -> 3 with a shortcut 1 -> 3 and the
// composite (ab) killed.
inline taukit::AlgebraPtr non_nakayama_bound() {
  using namespace taukit;
  Quiver q({1, 2, 3}, {{1, 1, 2}, {2, 2, 3}, {3, 1, 3}});
  return make_monomial_algebra(q, {Path{1, 3, {1, 2}}});
}

// Radical layers all simple.
inline bool uniserial(const taukit::Representation& m) {
  taukit::Representation layer = m;
  while (!layer.is_zero()) {
    taukit::Representation rad = taukit::structural_series(layer).radical;
    if (layer.total_dim() - rad.total_dim() != 1) return false;
    layer = rad;
  }
  return true;
}
