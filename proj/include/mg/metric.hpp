#pragma once

#include <optional>
#include <vector>

#include "mg/graph.hpp"

namespace mg {

// Per-vertex eccentricities of a connected graph.
struct EccentricityProfile {
  std::vector<int> ecc;
  int rad = 0;
  int diam = 0;
};

// Center / annulus / periphery split by eccentricity thresholds. For a
// self-centered graph (rad == diam) the three sets are not a partition:
// center and periphery both equal V(G) and the annulus is empty.
struct MetricPartition {
  VertexSet center;
  VertexSet annulus;
  VertexSet periphery;
  bool self_centered = false;
};

// Induced subgraphs on center, annulus and periphery, in that order.
// The annular graph is the null graph when the annulus is empty.
struct MetricSubgraphs {
  Graph central;
  Graph annular;
  Graph peripheral;
};

struct ClassTags {
  bool is_null = false;
  bool is_connected = false;
  bool is_path = false;
  bool is_cycle = false;
  bool is_complete = false;
  std::optional<int> regular_degree;
};

// Requires g connected and non-null.
EccentricityProfile eccentricity_profile(const Graph& g);
MetricPartition metric_partition(const Graph& g);
MetricSubgraphs metric_subgraphs(const Graph& g);

// Tolerates disconnected and null graphs.
ClassTags classify(const Graph& g);

// Compact descriptor used in reports: "null", "path", "cycle", "complete",
// "<k>-regular", "connected" or "disconnected".
std::string class_name(const ClassTags& tags);

}  // namespace mg
