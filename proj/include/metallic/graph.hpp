#pragma once

#include <vector>

namespace metallic {

using Digraph = std::vector<std::vector<int>>;

// Strongly connected components (Tarjan), iterative to avoid deep
// recursion on large graphs.
std::vector<std::vector<int>> strongly_connected_components(const Digraph& g);

// Vertices lying on a directed cycle: members of a component with at
// least two vertices, or carrying a self-loop.
std::vector<bool> on_cycle(const Digraph& g);

} // namespace metallic
