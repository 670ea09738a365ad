#include "taukit/quiver.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace taukit {

Quiver::Quiver(std::vector<VertexId> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (size_t i = 0; i + 1 < vertices_.size(); ++i)
    if (vertices_[i] == vertices_[i + 1])
      throw InputError("duplicate vertex id " + std::to_string(vertices_[i]));
  for (VertexId v : vertices_)
    if (v < 0) throw InputError("vertex ids must be non-negative");

  std::sort(arrows_.begin(), arrows_.end(),
            [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
  for (size_t i = 0; i + 1 < arrows_.size(); ++i)
    if (arrows_[i].id == arrows_[i + 1].id)
      throw InputError("duplicate arrow id " + std::to_string(arrows_[i].id));
  for (const Arrow& a : arrows_) {
    if (a.id < 0) throw InputError("arrow ids must be non-negative");
    if (!has_vertex(a.source) || !has_vertex(a.target))
      throw InputError("arrow " + std::to_string(a.id) + " references an unknown vertex");
  }
}

bool Quiver::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Quiver::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw InputError("unknown vertex " + std::to_string(v));
  return static_cast<int>(it - vertices_.begin());
}

const Arrow& Quiver::arrow(ArrowId a) const {
  return arrows_[arrow_index(a)];
}

int Quiver::arrow_index(ArrowId a) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), a,
                             [](const Arrow& ar, ArrowId id) { return ar.id < id; });
  if (it == arrows_.end() || it->id != a)
    throw InputError("unknown arrow " + std::to_string(a));
  return static_cast<int>(it - arrows_.begin());
}

std::vector<ArrowId> Quiver::arrows_from(VertexId v) const {
  std::vector<ArrowId> out;
  for (const Arrow& a : arrows_)
    if (a.source == v) out.push_back(a.id);
  return out;
}

std::vector<ArrowId> Quiver::arrows_into(VertexId v) const {
  std::vector<ArrowId> out;
  for (const Arrow& a : arrows_)
    if (a.target == v) out.push_back(a.id);
  return out;
}

int Quiver::out_degree(VertexId v) const { return static_cast<int>(arrows_from(v).size()); }
int Quiver::in_degree(VertexId v) const { return static_cast<int>(arrows_into(v).size()); }

std::vector<std::vector<VertexId>> Quiver::components() const {
  std::vector<std::vector<VertexId>> result;
  std::set<VertexId> seen;
  for (VertexId start : vertices_) {
    if (seen.count(start)) continue;
    std::vector<VertexId> comp;
    std::queue<VertexId> q;
    q.push(start);
    seen.insert(start);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      comp.push_back(v);
      for (const Arrow& a : arrows_) {
        if (a.source == v && !seen.count(a.target)) {
          seen.insert(a.target);
          q.push(a.target);
        }
        if (a.target == v && !seen.count(a.source)) {
          seen.insert(a.source);
          q.push(a.source);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm; a loop keeps its vertex's in-degree positive forever.
  std::vector<int> indeg(vertices_.size(), 0);
  for (const Arrow& a : arrows_) ++indeg[vertex_index(a.target)];
  std::queue<int> q;
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (indeg[i] == 0) q.push(static_cast<int>(i));
  int removed = 0;
  while (!q.empty()) {
    int vi = q.front();
    q.pop();
    ++removed;
    VertexId v = vertices_[vi];
    for (const Arrow& a : arrows_) {
      if (a.source != v) continue;
      int ti = vertex_index(a.target);
      if (--indeg[ti] == 0) q.push(ti);
    }
  }
  return removed == static_cast<int>(vertices_.size());
}

std::vector<VertexId> Quiver::sources() const {
  std::vector<VertexId> out;
  for (VertexId v : vertices_)
    if (in_degree(v) == 0) out.push_back(v);
  return out;
}

std::vector<VertexId> Quiver::sinks() const {
  std::vector<VertexId> out;
  for (VertexId v : vertices_)
    if (out_degree(v) == 0) out.push_back(v);
  return out;
}

std::optional<int> Quiver::oriented_cycle_type() const {
  if (vertices_.empty()) return std::nullopt;
  for (VertexId v : vertices_)
    if (in_degree(v) != 1 || out_degree(v) != 1) return std::nullopt;
  if (components().size() != 1) return std::nullopt;
  return num_vertices();
}

Quiver Quiver::full_subquiver(const std::vector<VertexId>& keep) const {
  for (VertexId v : keep)
    if (!has_vertex(v)) throw InputError("full_subquiver: unknown vertex " + std::to_string(v));
  std::set<VertexId> ks(keep.begin(), keep.end());
  std::vector<Arrow> arrows;
  for (const Arrow& a : arrows_)
    if (ks.count(a.source) && ks.count(a.target)) arrows.push_back(a);
  return Quiver(std::vector<VertexId>(ks.begin(), ks.end()), std::move(arrows));
}

}  // namespace taukit
