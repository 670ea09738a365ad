#include "taukit/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace taukit {

bool path_less(const Path& a, const Path& b) {
  if (a.source != b.source) return a.source < b.source;
  if (a.target != b.target) return a.target < b.target;
  if (a.length() != b.length()) return a.length() < b.length();
  return a.arrows < b.arrows;
}

Path concat(const Path& p, const Path& q) {
  if (p.target != q.source) throw InputError("concat: paths do not compose");
  Path out{p.source, q.target, p.arrows};
  out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
  return out;
}

namespace {

bool is_contiguous_subword(const std::vector<ArrowId>& needle, const std::vector<ArrowId>& hay) {
  if (needle.size() > hay.size()) return false;
  for (size_t i = 0; i + needle.size() <= hay.size(); ++i)
    if (std::equal(needle.begin(), needle.end(), hay.begin() + i)) return true;
  return false;
}

void validate_relation(const Quiver& q, const Path& r) {
  if (r.length() < 2)
    throw InputError("relation must be a path of length >= 2");
  VertexId at = r.source;
  for (ArrowId a : r.arrows) {
    const Arrow& arr = q.arrow(a);
    if (arr.source != at)
      throw InputError("relation arrows do not compose");
    at = arr.target;
  }
  if (at != r.target) throw InputError("relation target mismatch");
}

// Walks are words over arrows; a word is alive while no relation occurs as a
// contiguous subword. The automaton state after reading a live word is its
// longest suffix that is a proper prefix of some relation (paired with the
// current end vertex, implicit in the suffix when non-empty).
struct AvoidanceAutomaton {
  const Quiver& quiver;
  const std::vector<Path>& relations;
  // Proper prefixes of relations, deduplicated, as arrow words. Index 0 is
  // the empty word.
  std::vector<std::vector<ArrowId>> states;

  explicit AvoidanceAutomaton(const Quiver& q, const std::vector<Path>& rels)
      : quiver(q), relations(rels) {
    std::set<std::vector<ArrowId>> prefixes;
    prefixes.emplace();
    for (const Path& r : rels)
      for (size_t len = 1; len < r.arrows.size(); ++len)
        prefixes.insert(std::vector<ArrowId>(r.arrows.begin(), r.arrows.begin() + len));
    states.assign(prefixes.begin(), prefixes.end());
  }

  int state_of(const std::vector<ArrowId>& word) const {
    auto it = std::lower_bound(states.begin(), states.end(), word);
    if (it == states.end() || *it != word) return -1;
    return static_cast<int>(it - states.begin());
  }

  // Next state after appending arrow `a` to a word in state `s`, or -1 when
  // the extended word contains a relation. Only the tracked suffix matters:
  // any new forbidden factor must be a suffix of the extension.
  int step(int s, ArrowId a) const {
    std::vector<ArrowId> w = states[s];
    w.push_back(a);
    for (size_t drop = 0; drop <= w.size(); ++drop) {
      std::vector<ArrowId> suffix(w.begin() + drop, w.end());
      for (const Path& r : relations)
        if (suffix == r.arrows) return -1;
      int next = state_of(suffix);
      if (next >= 0) return next;
    }
    return state_of({});
  }
};

}  // namespace

MonomialAlgebra::MonomialAlgebra(Quiver quiver, std::vector<Path> relations)
    : quiver_(std::move(quiver)) {
  for (const Path& r : relations) validate_relation(quiver_, r);

  // Minimal generating set: drop any relation that contains another one as a
  // contiguous subpath, and deduplicate.
  std::sort(relations.begin(), relations.end(),
            [](const Path& a, const Path& b) { return path_less(a, b); });
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  for (const Path& r : relations) {
    bool redundant = false;
    for (const Path& other : relations) {
      if (other == r || other.length() > r.length()) continue;
      if (is_contiguous_subword(other.arrows, r.arrows)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) relations_.push_back(r);
  }

  AvoidanceAutomaton aut(quiver_, relations_);

  // Reachable product states (vertex, suffix state) with transition memo.
  struct Node {
    VertexId vertex;
    int state;
    auto operator<=>(const Node&) const = default;
  };
  std::map<Node, int> ids;
  std::vector<Node> nodes;
  std::vector<std::vector<std::pair<ArrowId, int>>> edges;
  auto intern = [&](Node n) {
    auto [it, fresh] = ids.try_emplace(n, static_cast<int>(nodes.size()));
    if (fresh) {
      nodes.push_back(n);
      edges.emplace_back();
    }
    return it->second;
  };
  for (VertexId v : quiver_.vertices()) intern({v, aut.state_of({})});
  for (size_t i = 0; i < nodes.size(); ++i) {
    Node n = nodes[i];
    for (ArrowId a : quiver_.arrows_from(n.vertex)) {
      int next = aut.step(n.state, a);
      if (next < 0) continue;
      int j = intern({quiver_.arrow(a).target, next});
      edges[i].push_back({a, j});
    }
  }

  // Finite dimension iff the live state graph is acyclic.
  {
    std::vector<int> color(nodes.size(), 0);
    auto dfs = [&](auto&& self, int i) -> bool {
      color[i] = 1;
      for (auto [a, j] : edges[i]) {
        if (color[j] == 1) return false;
        if (color[j] == 0 && !self(self, j)) return false;
      }
      color[i] = 2;
      return true;
    };
    for (size_t i = 0; i < nodes.size(); ++i)
      if (color[i] == 0 && !dfs(dfs, static_cast<int>(i)))
        throw InputError(
            "algebra is infinite-dimensional: arbitrarily long relation-avoiding paths exist");
  }

  // Enumerate all live walks; the state graph is a DAG, so this terminates.
  constexpr int kDimGuard = 200000;
  std::vector<ArrowId> word;
  auto enumerate = [&](auto&& self, VertexId start, int node) -> void {
    basis_.push_back(Path{start, nodes[node].vertex, word});
    if (static_cast<int>(basis_.size()) > kDimGuard)
      throw InputError("algebra dimension exceeds the supported size");
    for (auto [a, j] : edges[node]) {
      word.push_back(a);
      self(self, start, j);
      word.pop_back();
    }
  };
  for (VertexId v : quiver_.vertices()) enumerate(enumerate, v, ids.at({v, aut.state_of({})}));

  std::sort(basis_.begin(), basis_.end(),
            [](const Path& a, const Path& b) { return path_less(a, b); });

  int n = quiver_.num_vertices();
  group_ranges_.assign(n, std::vector<std::pair<int, int>>(n, {0, 0}));
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
    int si = vertex_index(basis_[i].source), ti = vertex_index(basis_[i].target);
    auto& range = group_ranges_[si][ti];
    if (range.first == range.second) range = {i, i + 1};
    else range.second = i + 1;
  }
}

std::span<const Path> MonomialAlgebra::group(VertexId i, VertexId j) const {
  auto [b, e] = group_ranges_[vertex_index(i)][vertex_index(j)];
  return std::span<const Path>(basis_.data() + b, static_cast<size_t>(e - b));
}

std::optional<int> MonomialAlgebra::basis_index(const Path& p) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), p,
                             [](const Path& a, const Path& b) { return path_less(a, b); });
  if (it == basis_.end() || !(*it == p)) return std::nullopt;
  return static_cast<int>(it - basis_.begin());
}

IntMatrix MonomialAlgebra::cartan_matrix() const {
  int n = num_vertices();
  IntMatrix c(n, n);
  for (const Path& p : basis_) ++c(vertex_index(p.target), vertex_index(p.source));
  return c;
}

bool MonomialAlgebra::is_nakayama() const {
  for (VertexId v : quiver_.vertices())
    if (quiver_.in_degree(v) > 1 || quiver_.out_degree(v) > 1) return false;
  return true;
}

AlgebraPtr make_monomial_algebra(Quiver quiver, std::vector<Path> relations) {
  return std::make_shared<const MonomialAlgebra>(std::move(quiver), std::move(relations));
}

Path reverse_path(const Path& p) {
  Path out{p.target, p.source, {p.arrows.rbegin(), p.arrows.rend()}};
  return out;
}

AlgebraPtr opposite_algebra(const MonomialAlgebra& a) {
  std::vector<Arrow> arrows;
  for (const Arrow& ar : a.quiver().arrows()) arrows.push_back({ar.id, ar.target, ar.source});
  Quiver q(a.quiver().vertices(), std::move(arrows));
  std::vector<Path> rels;
  for (const Path& r : a.relations()) rels.push_back(reverse_path(r));
  return make_monomial_algebra(std::move(q), std::move(rels));
}

AlgebraPtr delete_source_vertex(const MonomialAlgebra& a, VertexId v) {
  if (!a.quiver().has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
  if (a.quiver().in_degree(v) != 0)
    throw InputError("vertex " + std::to_string(v) + " is not a source");
  std::vector<VertexId> keep;
  for (VertexId w : a.quiver().vertices())
    if (w != v) keep.push_back(w);
  Quiver sub = a.quiver().full_subquiver(keep);
  std::set<ArrowId> surviving;
  for (const Arrow& ar : sub.arrows()) surviving.insert(ar.id);
  std::vector<Path> rels;
  for (const Path& r : a.relations()) {
    bool ok = true;
    for (ArrowId x : r.arrows)
      if (!surviving.count(x)) ok = false;
    if (ok) rels.push_back(r);
  }
  return make_monomial_algebra(std::move(sub), std::move(rels));
}

AlgebraPtr restrict_to_vertices(const MonomialAlgebra& a, const std::vector<VertexId>& keep) {
  std::set<VertexId> in(keep.begin(), keep.end());
  for (const Arrow& ar : a.quiver().arrows())
    if (in.count(ar.source) != in.count(ar.target))
      throw InputError("restriction boundary crosses arrow " + std::to_string(ar.id));
  Quiver sub = a.quiver().full_subquiver(keep);
  std::vector<Path> rels;
  for (const Path& r : a.relations())
    if (in.count(r.source)) rels.push_back(r);
  return make_monomial_algebra(std::move(sub), std::move(rels));
}

}  // namespace taukit
