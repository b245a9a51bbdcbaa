#pragma once

#include <cstdint>
#include <vector>

#include "polarnet/graph.hpp"
#include "polarnet/partition.hpp"

namespace polarnet {

struct DetectionOptions {
  double resolution = 1.0;
  std::uint64_t seed = 0;
  /// A local-moving sweep that raises modularity by less than this ends the phase.
  double min_improvement = 1e-7;
};

struct DetectionResult {
  Partition partition;
  /// Modularity (at the configured resolution) after each pass.
  std::vector<double> pass_modularity;
};

/// Multilevel modularity maximization: local moving in a seeded random
/// vertex order, then aggregation of groups into super-vertices, repeated
/// until a pass moves nothing. Groups are numbered by decreasing size with
/// isolated vertices as trailing singletons.
/// Throws ArgumentError for a graph without edges or a non-positive resolution.
DetectionResult detect_communities_traced(const UndirectedView& g, const DetectionOptions& options = {});

inline Partition detect_communities(const UndirectedView& g, const DetectionOptions& options = {}) {
  return detect_communities_traced(g, options).partition;
}

}  // namespace polarnet
