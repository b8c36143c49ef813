#include "mg/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace mg {

VertexSet::VertexSet(std::initializer_list<int> vs) {
  for (int v : vs) add(v);
}

VertexSet VertexSet::full(int order) {
  if (order == 0) return VertexSet{};
  return VertexSet{~std::uint64_t{0} >> (64 - order)};
}

VertexSet VertexSet::range(int begin, int end) {
  VertexSet s;
  for (int v = begin; v < end; ++v) s.add(v);
  return s;
}

void VertexSet::add(int v) {
  if (v < 0 || v >= 64) throw std::invalid_argument("VertexSet: vertex out of range");
  mask_ |= std::uint64_t{1} << v;
}

int VertexSet::size() const { return std::popcount(mask_); }

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  std::uint64_t m = mask_;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Graph::Graph(int order) : n_(order), adj_(static_cast<std::size_t>(order), 0) {
  if (order < 0 || order > kMaxOrder)
    throw std::invalid_argument("Graph: order must be in [0, " +
                                std::to_string(kMaxOrder) + "], got " +
                                std::to_string(order));
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("Graph: vertex out of range");
  if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
}

int Graph::size() const {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_pair(u, v);
  return ((adj_[u] >> v) & 1u) != 0;
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
  return std::popcount(adj_[v]);
}

int Graph::min_degree() const {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, std::popcount(adj_[v]));
  return n_ == 0 ? 0 : best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, std::popcount(adj_[v]));
  return best;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t m = adj_[u] >> (u + 1) << (u + 1);  // neighbors above u
    while (m != 0) {
      out.emplace_back(u, std::countr_zero(m));
      m &= m - 1;
    }
  }
  return out;
}

Graph standard_graph(GraphKind kind, int n) {
  if (kind == GraphKind::Cycle && n < 3)
    throw std::invalid_argument("standard_graph: cycle requires n >= 3");
  Graph g(n);
  switch (kind) {
    case GraphKind::Path:
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      break;
    case GraphKind::Cycle:
      for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
      break;
    case GraphKind::Complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
      break;
    case GraphKind::Empty:
      break;
  }
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

DisjointUnion disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  for (const Graph& p : parts) total += p.order();
  if (total > kMaxOrder)
    throw std::invalid_argument("disjoint_union: result exceeds order cap");
  DisjointUnion out{Graph(total), {}};
  int off = 0;
  for (const Graph& p : parts) {
    out.offsets.push_back(off);
    for (auto [u, v] : p.edge_list()) out.graph.add_edge(off + u, off + v);
    off += p.order();
  }
  return out;
}

DisjointUnion disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

Graph join(const Graph& g, const Graph& h) {
  DisjointUnion du = disjoint_union({g, h});
  Graph out = std::move(du.graph);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<int> vs = s.vertices();
  for (int v : vs)
    if (v >= g.order())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
  Graph out(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j]))
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

std::vector<int> distances_from(const Graph& g, int source) {
  const int n = g.order();
  if (source < 0 || source >= n)
    throw std::invalid_argument("distances_from: source out of range");
  std::vector<int> dist(static_cast<std::size_t>(n), kUnreachable);
  std::uint64_t visited = std::uint64_t{1} << source;
  std::uint64_t frontier = visited;
  dist[static_cast<std::size_t>(source)] = 0;
  int level = 0;
  while (frontier != 0) {
    ++level;
    std::uint64_t next = 0;
    std::uint64_t m = frontier;
    while (m != 0) {
      next |= g.neighbor_mask(std::countr_zero(m));
      m &= m - 1;
    }
    next &= ~visited;
    visited |= next;
    frontier = next;
    m = next;
    while (m != 0) {
      dist[static_cast<std::size_t>(std::countr_zero(m))] = level;
      m &= m - 1;
    }
  }
  return dist;
}

int bfs_eccentricity(std::span<const std::uint64_t> rows, int n, int src) {
  const std::uint64_t all = n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n);
  std::uint64_t visited = std::uint64_t{1} << src;
  std::uint64_t frontier = visited;
  int level = 0;
  while (visited != all) {
    std::uint64_t next = 0;
    std::uint64_t m = frontier;
    while (m != 0) {
      next |= rows[static_cast<std::size_t>(std::countr_zero(m))];
      m &= m - 1;
    }
    next &= ~visited;
    if (next == 0) return kUnreachable;
    visited |= next;
    frontier = next;
    ++level;
  }
  return level;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return bfs_eccentricity(g.rows(), g.order(), 0) != kUnreachable;
}

Graph relabeled(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabeled: permutation size mismatch");
  Graph out(n);
  for (auto [u, v] : g.edge_list()) out.add_edge(perm[u], perm[v]);
  return out;
}

namespace {

// Local vertex connectivity between non-adjacent s and t, by unit-capacity
// max flow on the vertex-split network (Menger). Stops early at cap.
int local_connectivity(const Graph& g, int s, int t, int cap) {
  const int n = g.order();
  const int nodes = 2 * n;  // in(v) = 2v, out(v) = 2v+1
  const int big = n + 1;
  std::vector<std::vector<int>> c(static_cast<std::size_t>(nodes),
                                  std::vector<int>(static_cast<std::size_t>(nodes), 0));
  for (int v = 0; v < n; ++v) c[2 * v][2 * v + 1] = 1;
  for (auto [u, v] : g.edge_list()) {
    c[2 * u + 1][2 * v] = big;
    c[2 * v + 1][2 * u] = big;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  c[2 * s][2 * s + 1] = big;
  c[2 * t][2 * t + 1] = big;

  int flow = 0;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  while (flow < cap) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[static_cast<std::size_t>(sink)] == -1) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < nodes; ++y)
        if (parent[static_cast<std::size_t>(y)] == -1 && c[x][y] > 0) {
          parent[static_cast<std::size_t>(y)] = x;
          q.push(y);
        }
    }
    if (parent[static_cast<std::size_t>(sink)] == -1) break;
    for (int y = sink; y != source; y = parent[static_cast<std::size_t>(y)]) {
      int x = parent[static_cast<std::size_t>(y)];
      --c[x][y];
      ++c[y][x];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("vertex_connectivity: order must be >= 1");
  if (g.size() == n * (n - 1) / 2) return n - 1;  // complete, including K_1
  int best = n - 1;
  for (int s = 0; s < n && best > 0; ++s)
    for (int t = s + 1; t < n && best > 0; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, local_connectivity(g, s, t, best));
  return best;
}

}  // namespace mg
