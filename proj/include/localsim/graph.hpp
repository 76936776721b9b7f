#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "localsim/error.hpp"

namespace localsim {

/// Vertex identities are arbitrary distinct non-negative integers. Generators
/// assign 0..n-1; file input may carry any distinct ids.
using VertexId = std::uint32_t;

/// Labels (decomposition labels and colors alike) are positive integers.
using Label = std::uint64_t;

/// Immutable undirected simple graph: no self-loops, no parallel edges.
/// Safe for concurrent read access once constructed.
class Graph {
public:
  Graph() = default;

  /// Build from an explicit vertex set and edge list. Duplicate edges are
  /// merged; self-loops and unknown endpoints are errors.
  static Graph from_edges(std::vector<VertexId> vertices,
                          const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
      throw SimError(ErrorKind::InvalidArgument, "duplicate vertex id");
    g.ids_ = std::move(vertices);
    g.index_.reserve(g.ids_.size());
    for (std::uint32_t i = 0; i < g.ids_.size(); ++i) g.index_.emplace(g.ids_[i], i);
    g.adj_.assign(g.ids_.size(), {});
    for (const auto& [u, v] : edges) {
      if (u == v)
        throw SimError(ErrorKind::InvalidArgument,
                       "self-loop at vertex " + std::to_string(u));
      auto iu = g.index_.find(u);
      auto iv = g.index_.find(v);
      if (iu == g.index_.end() || iv == g.index_.end())
        throw SimError(ErrorKind::InvalidArgument, "edge endpoint not in vertex set");
      g.adj_[iu->second].push_back(v);
      g.adj_[iv->second].push_back(u);
    }
    for (auto& nb : g.adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    g.edge_count_ = 0;
    for (const auto& nb : g.adj_) g.edge_count_ += nb.size();
    g.edge_count_ /= 2;
    g.max_degree_ = 0;
    for (const auto& nb : g.adj_) g.max_degree_ = std::max(g.max_degree_, nb.size());
    return g;
  }

  /// Build with vertex ids 0..n-1.
  static Graph contiguous(std::uint32_t n,
                          const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::vector<VertexId> ids(n);
    for (std::uint32_t i = 0; i < n; ++i) ids[i] = i;
    return from_edges(std::move(ids), edges);
  }

  std::size_t vertex_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Vertex ids in ascending order.
  const std::vector<VertexId>& vertices() const { return ids_; }

  bool contains(VertexId v) const { return index_.find(v) != index_.end(); }

  std::uint32_t index_of(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end())
      throw SimError(ErrorKind::InvalidArgument, "unknown vertex " + std::to_string(v));
    return it->second;
  }

  VertexId id_at(std::uint32_t index) const { return ids_[index]; }

  /// Neighbor ids of v, sorted ascending.
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[index_of(v)]; }

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  std::size_t max_degree() const { return max_degree_; }

  bool has_edge(VertexId u, VertexId v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges as (min, max) pairs, lexicographically sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (std::uint32_t i = 0; i < ids_.size(); ++i)
      for (VertexId v : adj_[i])
        if (ids_[i] < v) out.emplace_back(ids_[i], v);
    return out;
  }

  bool operator==(const Graph& other) const {
    return ids_ == other.ids_ && adj_ == other.adj_;
  }

private:
  std::vector<VertexId> ids_;                       // sorted
  std::vector<std::vector<VertexId>> adj_;          // by index, sorted neighbor ids
  std::unordered_map<VertexId, std::uint32_t> index_;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
};

/// Total map vertex -> positive label. Serves both as a coloring and as a
/// network-decomposition labeling.
class LabelAssignment {
public:
  LabelAssignment() = default;

  void set(VertexId v, Label l) {
    if (l == 0) throw SimError(ErrorKind::InvalidArgument, "labels must be positive");
    labels_[v] = l;
  }

  Label at(VertexId v) const {
    auto it = labels_.find(v);
    if (it == labels_.end())
      throw SimError(ErrorKind::InvalidArgument,
                     "no label for vertex " + std::to_string(v));
    return it->second;
  }

  bool contains(VertexId v) const { return labels_.find(v) != labels_.end(); }

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  bool total_on(const Graph& g) const {
    for (VertexId v : g.vertices())
      if (!contains(v)) return false;
    return true;
  }

  const std::map<VertexId, Label>& entries() const { return labels_; }

  Label max_label() const {
    Label m = 0;
    for (const auto& [v, l] : labels_) m = std::max(m, l);
    return m;
  }

  std::size_t distinct_labels() const {
    std::vector<Label> vals;
    vals.reserve(labels_.size());
    for (const auto& [v, l] : labels_) vals.push_back(l);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals.size();
  }

  bool operator==(const LabelAssignment& other) const { return labels_ == other.labels_; }

private:
  std::map<VertexId, Label> labels_;
};

/// Maximal connected set of vertices sharing one label.
struct Cluster {
  std::vector<VertexId> members; // sorted, non-empty
  Label label = 0;
};

/// BFS shortest-path length; nullopt when unreachable.
inline std::optional<std::uint32_t> distance(const Graph& g, VertexId from, VertexId to) {
  g.index_of(from);
  g.index_of(to);
  if (from == to) return 0;
  std::unordered_map<VertexId, std::uint32_t> dist;
  dist.emplace(from, 0);
  std::queue<VertexId> q;
  q.push(from);
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    std::uint32_t du = dist[u];
    for (VertexId w : g.neighbors(u)) {
      if (dist.find(w) != dist.end()) continue;
      if (w == to) return du + 1;
      dist.emplace(w, du + 1);
      q.push(w);
    }
  }
  return std::nullopt;
}

/// Gamma_r(v): all vertices at distance <= r from v, sorted ascending.
inline std::vector<VertexId> r_hop_neighborhood(const Graph& g, VertexId v, std::uint32_t r) {
  g.index_of(v);
  std::unordered_map<VertexId, std::uint32_t> dist;
  dist.emplace(v, 0);
  std::queue<VertexId> q;
  q.push(v);
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    std::uint32_t du = dist[u];
    if (du == r) continue;
    for (VertexId w : g.neighbors(u)) {
      if (dist.find(w) != dist.end()) continue;
      dist.emplace(w, du + 1);
      q.push(w);
    }
  }
  std::vector<VertexId> out;
  out.reserve(dist.size());
  for (const auto& [w, d] : dist) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

/// Subgraph induced by s; original vertex ids are preserved.
inline Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& s) {
  std::vector<VertexId> ids(s);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u : ids) {
    if (!g.contains(u))
      throw SimError(ErrorKind::InvalidArgument,
                     "induced_subgraph: vertex " + std::to_string(u) + " not in graph");
    for (VertexId v : g.neighbors(u))
      if (u < v && std::binary_search(ids.begin(), ids.end(), v)) edges.emplace_back(u, v);
  }
  return Graph::from_edges(std::move(ids), edges);
}

/// Connected components of the same-label subgraphs. The result partitions
/// the vertex set; clusters are ordered by their smallest member.
inline std::vector<Cluster> extract_clusters(const Graph& g, const LabelAssignment& f) {
  if (!f.total_on(g))
    throw SimError(ErrorKind::InvalidArgument, "label assignment is not total on the graph");
  std::vector<Cluster> clusters;
  std::unordered_map<VertexId, bool> visited;
  for (VertexId v : g.vertices()) {
    if (visited[v]) continue;
    Cluster c;
    c.label = f.at(v);
    std::queue<VertexId> q;
    q.push(v);
    visited[v] = true;
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      c.members.push_back(u);
      for (VertexId w : g.neighbors(u)) {
        if (visited[w] || f.at(w) != c.label) continue;
        visited[w] = true;
        q.push(w);
      }
    }
    std::sort(c.members.begin(), c.members.end());
    clusters.push_back(std::move(c));
  }
  return clusters;
}

/// Strong diameter: max pairwise distance measured inside G(cl.members).
inline std::uint32_t cluster_diameter(const Graph& g, const Cluster& cl) {
  Graph sub = induced_subgraph(g, cl.members);
  std::uint32_t diam = 0;
  for (VertexId v : sub.vertices()) {
    // BFS from each member; unreachable members mean the precondition is broken
    std::unordered_map<VertexId, std::uint32_t> dist;
    dist.emplace(v, 0);
    std::queue<VertexId> q;
    q.push(v);
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      for (VertexId w : sub.neighbors(u)) {
        if (dist.find(w) != dist.end()) continue;
        dist.emplace(w, dist[u] + 1);
        q.push(w);
      }
    }
    if (dist.size() != sub.vertex_count())
      throw SimError(ErrorKind::InvalidArgument, "cluster members are not connected");
    for (const auto& [w, d] : dist) diam = std::max(diam, d);
  }
  return diam;
}

/// A label assignment together with its claimed (d, c) parameters and the
/// extracted clusters. Validity is checked by verify_decomposition.
struct NetworkDecomposition {
  LabelAssignment assignment;
  std::uint32_t d = 0; // cluster strong-diameter bound
  Label c = 1;         // labels are claimed to lie in {1, ..., c}
  std::vector<Cluster> clusters;

  static NetworkDecomposition build(const Graph& g, LabelAssignment assignment,
                                    std::uint32_t d, Label c) {
    NetworkDecomposition nd;
    nd.clusters = extract_clusters(g, assignment);
    nd.assignment = std::move(assignment);
    nd.d = d;
    nd.c = c;
    return nd;
  }
};

} // namespace localsim
