#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace mg {

// Order cap shared with the graph6 short form; enforced by every constructor.
inline constexpr int kMaxOrder = 62;

// Sentinel distance for vertices the BFS source cannot reach.
inline constexpr int kUnreachable = -1;

// Subset of the vertices of a host graph, stored as a bitmask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::uint64_t mask) : mask_(mask) {}
  VertexSet(std::initializer_list<int> vs);

  static VertexSet full(int order);
  static VertexSet range(int begin, int end);  // [begin, end)

  void add(int v);
  bool contains(int v) const {
    return v >= 0 && v < 64 && ((mask_ >> v) & 1u) != 0;
  }
  bool empty() const { return mask_ == 0; }
  int size() const;
  std::uint64_t mask() const { return mask_; }
  std::vector<int> vertices() const;  // ascending

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::uint64_t mask_ = 0;
};

// Finite simple graph on vertices 0..order-1 with bit-row adjacency.
// No self-loops; adjacency is kept symmetric. Order is capped at kMaxOrder.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  static Graph from_edges(int order,
                          std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  int size() const;  // edge count

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
  std::span<const std::uint64_t> rows() const { return adj_; }
  int degree(int v) const;
  int min_degree() const;
  int max_degree() const;

  std::vector<std::pair<int, int>> edge_list() const;  // lexicographic

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

enum class GraphKind { Path, Cycle, Complete, Empty };

// P_n / C_n / K_n / edgeless graph; path and cycle edges run i-(i+1),
// the cycle wrapping (n-1)-0. Cycle requires n >= 3.
Graph standard_graph(GraphKind kind, int n);

inline Graph path_graph(int n) { return standard_graph(GraphKind::Path, n); }
inline Graph cycle_graph(int n) { return standard_graph(GraphKind::Cycle, n); }
inline Graph complete_graph(int n) {
  return standard_graph(GraphKind::Complete, n);
}
inline Graph empty_graph(int n) { return standard_graph(GraphKind::Empty, n); }

Graph complement(const Graph& g);

// Vertex IDs are relabeled block-wise in input order; offsets[i] is the
// ID of part i's first vertex in the result.
struct DisjointUnion {
  Graph graph;
  std::vector<int> offsets;
};
DisjointUnion disjoint_union(std::span<const Graph> parts);
DisjointUnion disjoint_union(std::initializer_list<Graph> parts);

Graph join(const Graph& g, const Graph& h);

// Vertices of s relabeled densely, preserving relative order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// BFS hop counts from source; unreachable vertices get kUnreachable.
std::vector<int> distances_from(const Graph& g, int source);

// Max BFS distance from src over the rows of an order-n graph, or
// kUnreachable if some vertex is not reached. Allocation-free helper shared
// by the metric module and the search hot loop.
int bfs_eccentricity(std::span<const std::uint64_t> rows, int n, int src);

bool is_connected(const Graph& g);  // order 0 counts as not connected

// Relabels g: perm[v] is the new ID of vertex v (perm must be a bijection).
Graph relabeled(const Graph& g, std::span<const int> perm);

// Minimum number of vertices whose deletion disconnects g or reduces it to
// a single vertex; complete graphs report order-1. Exact, via vertex-split
// max flow over all non-adjacent pairs.
int vertex_connectivity(const Graph& g);

}  // namespace mg
