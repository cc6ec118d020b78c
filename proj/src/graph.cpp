#include "metallic/graph.hpp"

#include <algorithm>

namespace metallic {

std::vector<std::vector<int>> strongly_connected_components(const Digraph& g) {
    const int n = static_cast<int>(g.size());
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::vector<int>> out;
    int counter = 0;
    // Explicit DFS frames: (vertex, next successor position).
    std::vector<std::pair<int, std::size_t>> frames;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos < g[v].size()) {
                const int w = g[v][pos++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const int done = v;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
            if (low[done] == index[done]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
        }
    }
    return out;
}

std::vector<bool> on_cycle(const Digraph& g) {
    std::vector<bool> out(g.size(), false);
    for (const auto& comp : strongly_connected_components(g)) {
        if (comp.size() >= 2) {
            for (int v : comp) out[v] = true;
        } else {
            const int v = comp[0];
            out[v] = std::find(g[v].begin(), g[v].end(), v) != g[v].end();
        }
    }
    return out;
}

} // namespace metallic
