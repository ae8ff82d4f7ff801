#include "tricount/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tricount {

Graph Graph::from_pairs(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs) {
  // Endpoint ids in ascending order define the dense remap.
  std::vector<std::uint64_t> ids;
  ids.reserve(pairs.size() * 2);
  for (const auto& [a, b] : pairs) {
    if (a == b) continue;  // self-loop
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("too many vertices");

  const auto dense = [&ids](std::uint64_t raw) {
    return static_cast<std::uint32_t>(
        std::lower_bound(ids.begin(), ids.end(), raw) - ids.begin());
  };

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a == b) continue;
    std::uint32_t u = dense(a), v = dense(b);
    if (u > v) std::swap(u, v);
    edges.push_back({u, v});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = static_cast<std::uint32_t>(ids.size());
  g.edges_ = std::move(edges);
  // Identity remaps (ids already 0..n-1) are not worth keeping.
  if (!ids.empty() && ids.back() != g.n_ - 1) {
    g.original_ids_ = std::move(ids);
  }
  g.build_adjacency();
  return g;
}

Graph Graph::from_canonical_edges(std::uint32_t n, std::vector<Edge> edges) {
  const Edge* prev = nullptr;
  for (const Edge& e : edges) {
    if (e.u >= e.v || e.v >= n)
      throw std::invalid_argument("edge not in canonical form");
    if (prev && !(*prev < e))
      throw std::invalid_argument("edges not sorted and unique");
    prev = &e;
  }
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.build_adjacency();
  return g;
}

void Graph::build_adjacency() {
  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::uint32_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];

  adjacency_.resize(edges_.size() * 2);
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Lower neighbors first, then upper: both passes visit edges in
  // lexicographic order, so every neighbor list comes out sorted without a
  // per-list sort.
  for (const Edge& e : edges_) adjacency_[cursor[e.v]++] = e.u;
  for (const Edge& e : edges_) adjacency_[cursor[e.u]++] = e.v;

  max_degree_ = 0;
  for (std::uint32_t v = 0; v < n_; ++v)
    max_degree_ = std::max(max_degree_, degree(v));
}

std::span<const std::uint32_t> Graph::neighbors(std::uint32_t v) const {
  if (v >= n_) throw std::out_of_range("vertex out of range");
  return {adjacency_.data() + offsets_[v],
          static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

std::uint32_t Graph::degree(std::uint32_t v) const {
  if (v >= n_) throw std::out_of_range("vertex out of range");
  return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
  if (u == v) return false;
  const auto nb = neighbors(u);
  if (v >= n_) throw std::out_of_range("vertex out of range");
  return std::binary_search(nb.begin(), nb.end(), v);
}

}  // namespace tricount
