#pragma once

// Brute-force reference for the enumerator. Works on adjacency bitmasks of
// at most 8 vertices and shares nothing with the library: graphs are grown
// edge by edge, planarity comes from peripheral cycles, and duplicates are
// removed by a direct isomorphism search.

#include <cstdint>
#include <map>
#include <vector>

namespace naive {

using Graph = std::vector<std::uint32_t>;  // adjacency rows

struct Census {
  std::map<int, long> types;  // vertices (= faces of the primal) -> classes
  long leaves = 0;            // labelled candidates examined
};

/// Isomorphism classes of 3-connected planar graphs on n vertices whose
/// faces are `quads` quadrilaterals and otherwise triangles.
std::vector<Graph> near_triangulations(int n, int quads, long* leaves = nullptr);

Census census(int max_vertices, int quads);

bool three_connected(const Graph& g);
std::vector<std::uint32_t> peripheral_cycles(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace naive
