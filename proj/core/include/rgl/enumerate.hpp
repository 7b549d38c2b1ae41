#pragma once

#include <functional>

#include "rgl/graph.hpp"

namespace rgl {

inline constexpr int kMaxEnumerationOrder = 10;

struct EnumerationFilter {
  int min_degree = 0;
  /// When > 0, only graphs without a path on this many vertices. Pruned
  /// during generation since the property is closed under edge deletion.
  int forbidden_path = 0;
  bool connected = false;
};

/// Visits every labelled graph on vertices 0..n-1 passing the filter.
/// Edges are decided in lexicographic order, absent before present.
/// f returns false to stop early. Returns the number of graphs visited.
/// Throws CapacityError for n > kMaxEnumerationOrder.
long long for_each_graph(int n, const EnumerationFilter& filter,
                         const std::function<bool(const Graph&)>& f);

}  // namespace rgl
