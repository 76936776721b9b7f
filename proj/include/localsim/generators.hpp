#pragma once

#include <cmath>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "localsim/graph.hpp"
#include "localsim/rng.hpp"

namespace localsim {

/// Erdos-Renyi G(n, p). Deterministic given the seed.
inline Graph generate_gnp(std::uint32_t n, double p, std::uint64_t seed) {
  if (n < 1) throw SimError(ErrorKind::InvalidArgument, "generate_gnp: n must be >= 1");
  if (p < 0.0 || p > 1.0)
    throw SimError(ErrorKind::InvalidArgument, "generate_gnp: p must be in [0, 1]");
  RandomStream rng(mix64(seed) ^ 0x676E7000ULL); // domain-separated from vertex streams
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
  return Graph::contiguous(n, edges);
}

/// Disjoint cliques K_{k1} and K_{k2} joined by a path of `len` edges between
/// one designated vertex of each clique. Vertices: 0..k1-1 first clique,
/// k1..k1+k2-1 second clique, then len-1 interior path vertices; the path runs
/// from vertex 0 to vertex k1.
inline Graph generate_clique_path(std::uint32_t k1, std::uint32_t k2, std::uint32_t len) {
  if (k1 < 1 || k2 < 1 || len < 1)
    throw SimError(ErrorKind::InvalidArgument, "generate_clique_path: k1, k2, len must be >= 1");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::uint32_t i = 0; i < k1; ++i)
    for (std::uint32_t j = i + 1; j < k1; ++j) edges.emplace_back(i, j);
  for (std::uint32_t i = 0; i < k2; ++i)
    for (std::uint32_t j = i + 1; j < k2; ++j) edges.emplace_back(k1 + i, k1 + j);
  const std::uint32_t n = k1 + k2 + len - 1;
  VertexId prev = 0;
  for (std::uint32_t i = 0; i < len - 1; ++i) {
    VertexId mid = k1 + k2 + i;
    edges.emplace_back(prev, mid);
    prev = mid;
  }
  edges.emplace_back(prev, k1);
  return Graph::contiguous(n, edges);
}

/// Random d-regular graph via repeated stub pairing (configuration model with
/// rejection of self-loops and parallel edges). Deterministic given the seed.
inline Graph generate_random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
  if (n < 1 || d >= n)
    throw SimError(ErrorKind::InvalidArgument, "generate_random_regular: need 0 <= d < n");
  if ((static_cast<std::uint64_t>(n) * d) % 2 != 0)
    throw SimError(ErrorKind::InvalidArgument, "generate_random_regular: n*d must be even");
  if (d == 0) return Graph::contiguous(n, {});

  RandomStream rng(mix64(seed) ^ 0x72656775ULL);
  const std::uint32_t attempts = 2000;
  for (std::uint32_t attempt = 0; attempt < attempts; ++attempt) {
    std::vector<VertexId> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (std::uint32_t v = 0; v < n; ++v)
      for (std::uint32_t k = 0; k < d; ++k) stubs.push_back(v);
    // Fisher-Yates
    for (std::size_t i = stubs.size() - 1; i > 0; --i)
      std::swap(stubs[i], stubs[rng.uniform(i + 1)]);
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(stubs.size() / 2);
    std::set<std::pair<VertexId, VertexId>> seen;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      VertexId a = stubs[i], b = stubs[i + 1];
      if (a == b) { ok = false; break; }
      auto key = std::minmax(a, b);
      if (!seen.insert({key.first, key.second}).second) { ok = false; break; }
      edges.emplace_back(a, b);
    }
    if (ok) return Graph::contiguous(n, edges);
  }
  throw SimError(ErrorKind::InvalidArgument,
                 "generate_random_regular: pairing failed; d too large relative to n");
}

} // namespace localsim
