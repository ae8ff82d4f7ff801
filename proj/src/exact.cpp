#include "tricount/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tricount {

namespace {

// Rank-space forward orientation: vertices are relabeled by (degree, id)
// rank and each edge becomes a single arc from lower to higher rank.
// Out-lists ascend in rank, so common out-neighbors fall out of one merge
// pass. arc_edge maps every arc back to its undirected edge index.
struct ForwardView {
  std::uint32_t n = 0;
  std::vector<std::uint64_t> offsets;   // n+1
  std::vector<std::uint32_t> targets;   // m, rank space
  std::vector<std::uint32_t> arc_edge;  // m
  std::vector<std::uint32_t> to_orig;   // rank -> original vertex
};

ForwardView build_forward(const Graph& g) {
  const std::uint32_t n = g.num_vertices();
  const auto edges = g.edges();

  ForwardView f;
  f.n = n;
  f.to_orig.resize(n);
  std::vector<std::uint32_t> rank_of(n);

  // Counting sort by degree; ids stay ascending within a degree bucket.
  std::vector<std::uint64_t> bucket(static_cast<std::size_t>(g.max_degree()) + 2, 0);
  for (std::uint32_t v = 0; v < n; ++v) ++bucket[g.degree(v) + 1];
  for (std::size_t d = 1; d < bucket.size(); ++d) bucket[d] += bucket[d - 1];
  for (std::uint32_t v = 0; v < n; ++v)
    f.to_orig[bucket[g.degree(v)]++] = v;
  for (std::uint32_t r = 0; r < n; ++r) rank_of[f.to_orig[r]] = r;

  f.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges)
    ++f.offsets[std::min(rank_of[e.u], rank_of[e.v]) + 1];
  for (std::uint32_t r = 0; r < n; ++r) f.offsets[r + 1] += f.offsets[r];

  f.targets.resize(edges.size());
  f.arc_edge.resize(edges.size());
  std::vector<std::uint64_t> cursor(f.offsets.begin(), f.offsets.end() - 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::uint32_t a = rank_of[edges[e].u];
    std::uint32_t b = rank_of[edges[e].v];
    if (a > b) std::swap(a, b);
    const std::uint64_t pos = cursor[a]++;
    f.targets[pos] = b;
    f.arc_edge[pos] = static_cast<std::uint32_t>(e);
  }

#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(n); ++r) {
    const std::uint64_t lo = f.offsets[r], hi = f.offsets[r + 1];
    if (hi - lo < 2) continue;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> list;
    list.reserve(hi - lo);
    for (std::uint64_t i = lo; i < hi; ++i)
      list.emplace_back(f.targets[i], f.arc_edge[i]);
    std::sort(list.begin(), list.end());
    for (std::uint64_t i = lo; i < hi; ++i) {
      f.targets[i] = list[i - lo].first;
      f.arc_edge[i] = list[i - lo].second;
    }
  }
  return f;
}

// Walks all triangles whose lowest-rank vertex is `a`. For each one the
// callback receives the three arc positions: (a,b), (a,c), (b,c). The op
// counter advances once per neighbor-list element consumed by the merge.
template <typename OnTriangle>
void scan_source(const ForwardView& f, std::uint32_t a,
                 std::uint64_t& triangles, std::uint64_t& ops,
                 OnTriangle&& on_triangle) {
  const std::uint64_t begin = f.offsets[a], end = f.offsets[a + 1];
  for (std::uint64_t i = begin; i < end; ++i) {
    const std::uint32_t b = f.targets[i];
    std::uint64_t pa = i + 1;  // out(a) entries past b; earlier ones can't match
    std::uint64_t pb = f.offsets[b];
    const std::uint64_t eb = f.offsets[b + 1];
    while (pa < end && pb < eb) {
      const std::uint32_t ta = f.targets[pa], tb = f.targets[pb];
      if (ta < tb) {
        ++pa;
        ++ops;
      } else if (tb < ta) {
        ++pb;
        ++ops;
      } else {
        ++triangles;
        ops += 2;
        on_triangle(i, pa, pb);
        ++pa;
        ++pb;
      }
    }
  }
}

struct NoOp {
  void operator()(std::uint64_t, std::uint64_t, std::uint64_t) const {}
};

}  // namespace

CountResult count_triangles(const Graph& g) {
  const ForwardView f = build_forward(g);
  std::uint64_t tri = 0, ops = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : tri, ops)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(f.n); ++a)
    scan_source(f, static_cast<std::uint32_t>(a), tri, ops, NoOp{});
  return {tri, ops};
}

CountResult count_triangles_serial(const Graph& g) {
  const ForwardView f = build_forward(g);
  std::uint64_t tri = 0, ops = 0;
  for (std::uint32_t a = 0; a < f.n; ++a) scan_source(f, a, tri, ops, NoOp{});
  return {tri, ops};
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  const ForwardView f = build_forward(g);
  std::vector<Triangle> out;
  std::uint64_t tri = 0, ops = 0;
  for (std::uint32_t a = 0; a < f.n; ++a) {
    scan_source(f, a, tri, ops,
                [&](std::uint64_t i, std::uint64_t pa, std::uint64_t) {
                  std::uint32_t x = f.to_orig[a];
                  std::uint32_t y = f.to_orig[f.targets[i]];
                  std::uint32_t z = f.to_orig[f.targets[pa]];
                  if (x > y) std::swap(x, y);
                  if (y > z) std::swap(y, z);
                  if (x > y) std::swap(x, y);
                  out.push_back({x, y, z});
                });
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

TriangleStats finish_stats(TriangleStats s) {
  s.max_per_edge = 0;
  s.sum_delta_sq = 0;
  for (const std::uint64_t d : s.per_edge) {
    s.max_per_edge = std::max(s.max_per_edge, d);
    s.sum_delta_sq += d * d;
  }
  s.max_per_vertex = 0;
  for (const std::uint64_t d : s.per_vertex)
    s.max_per_vertex = std::max(s.max_per_vertex, d);
  s.delta_bound = 3 * s.max_per_edge * s.triangles;
  return s;
}

}  // namespace

TriangleStats triangle_stats(const Graph& g) {
  const ForwardView f = build_forward(g);
  const std::size_t m = g.num_edges();
  TriangleStats s;
  s.per_edge.assign(m, 0);
  s.per_vertex.assign(f.n, 0);
  std::uint64_t tri = 0;
#pragma omp parallel reduction(+ : tri)
  {
    std::vector<std::uint64_t> pe(m, 0), pv(f.n, 0);
    std::uint64_t ops = 0;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(f.n); ++a) {
      scan_source(f, static_cast<std::uint32_t>(a), tri, ops,
                  [&](std::uint64_t i, std::uint64_t pa, std::uint64_t pb) {
                    ++pe[f.arc_edge[i]];
                    ++pe[f.arc_edge[pa]];
                    ++pe[f.arc_edge[pb]];
                    ++pv[f.to_orig[a]];
                    ++pv[f.to_orig[f.targets[i]]];
                    ++pv[f.to_orig[f.targets[pa]]];
                  });
    }
    // Per-worker counters merged under a lock; integer sums land on the
    // same totals for any worker count.
#pragma omp critical
    {
      for (std::size_t e = 0; e < m; ++e) s.per_edge[e] += pe[e];
      for (std::uint32_t v = 0; v < f.n; ++v) s.per_vertex[v] += pv[v];
    }
  }
  s.triangles = tri;
  return finish_stats(std::move(s));
}

TriangleStats triangle_stats_serial(const Graph& g) {
  const ForwardView f = build_forward(g);
  TriangleStats s;
  s.per_edge.assign(g.num_edges(), 0);
  s.per_vertex.assign(f.n, 0);
  std::uint64_t tri = 0, ops = 0;
  for (std::uint32_t a = 0; a < f.n; ++a) {
    scan_source(f, a, tri, ops,
                [&](std::uint64_t i, std::uint64_t pa, std::uint64_t pb) {
                  ++s.per_edge[f.arc_edge[i]];
                  ++s.per_edge[f.arc_edge[pa]];
                  ++s.per_edge[f.arc_edge[pb]];
                  ++s.per_vertex[f.to_orig[a]];
                  ++s.per_vertex[f.to_orig[f.targets[i]]];
                  ++s.per_vertex[f.to_orig[f.targets[pa]]];
                });
  }
  s.triangles = tri;
  return finish_stats(std::move(s));
}

std::uint64_t brute_force_count(const Graph& g, std::uint32_t limit) {
  const std::uint32_t n = g.num_vertices();
  if (n > limit)
    throw std::invalid_argument("brute-force oracle refused: " +
                                std::to_string(n) + " vertices exceeds limit " +
                                std::to_string(limit));
  std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    adj[static_cast<std::size_t>(e.v) * n + e.u] = 1;
  }
  std::uint64_t count = 0;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (!adj[static_cast<std::size_t>(u) * n + v]) continue;
      const std::uint8_t* row_u = adj.data() + static_cast<std::size_t>(u) * n;
      const std::uint8_t* row_v = adj.data() + static_cast<std::size_t>(v) * n;
      for (std::uint32_t w = v + 1; w < n; ++w)
        if (row_u[w] && row_v[w]) ++count;
    }
  return count;
}

}  // namespace tricount
