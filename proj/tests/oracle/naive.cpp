#include "naive.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace naive {

namespace {

int n_of(const Graph& g) { return static_cast<int>(g.size()); }

bool connected_without(const Graph& g, std::uint32_t removed) {
  const int n = n_of(g);
  const std::uint32_t all = ((1u << n) - 1) & ~removed;
  if (all == 0) return true;
  std::uint32_t seen = all & -all;
  std::uint32_t frontier = seen;
  while (frontier) {
    const int v = std::countr_zero(frontier);
    frontier &= frontier - 1;
    const std::uint32_t fresh = g[v] & all & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == all;
}

int edges_of(const Graph& g) {
  int twice = 0;
  for (auto row : g) twice += std::popcount(row);
  return twice / 2;
}

}  // namespace

bool three_connected(const Graph& g) {
  const int n = n_of(g);
  if (n < 4) return false;
  if (!connected_without(g, 0)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!connected_without(g, (1u << a) | (1u << b))) return false;
  return true;
}

// Vertex sets of induced, non-separating cycles.
std::vector<std::uint32_t> peripheral_cycles(const Graph& g) {
  const int n = n_of(g);
  std::vector<std::uint32_t> out;
  std::vector<int> path;
  std::function<void(int, std::uint32_t)> walk = [&](int v, std::uint32_t used) {
    const int s = path.front();
    for (int w = s + 1; w < n; ++w) {
      if (!(g[v] >> w & 1) || (used >> w & 1)) continue;
      path.push_back(w);
      walk(w, used | (1u << w));
      path.pop_back();
    }
    if (path.size() >= 3 && (g[v] >> s & 1) && path[1] < v) {
      // induced: each cycle vertex sees exactly two others on the cycle
      bool induced = true;
      for (int u : path)
        if (std::popcount(g[u] & used) != 2) induced = false;
      if (induced && connected_without(g, used)) out.push_back(used);
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    walk(s, 1u << s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
  const int n = n_of(a);
  if (n != n_of(b) || edges_of(a) != edges_of(b)) return false;
  std::vector<int> da(n), db(n);
  for (int i = 0; i < n; ++i) {
    da[i] = std::popcount(a[i]);
    db[i] = std::popcount(b[i]);
  }
  {
    auto x = da, y = db;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  std::vector<int> map(n, -1);
  std::uint32_t taken = 0;
  std::function<bool(int)> place = [&](int i) {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if ((taken >> j & 1) || da[i] != db[j]) continue;
      bool fits = true;
      for (int k = 0; k < i && fits; ++k)
        if (((a[i] >> k) & 1) != ((b[j] >> map[k]) & 1)) fits = false;
      if (!fits) continue;
      map[i] = j;
      taken |= 1u << j;
      if (place(i + 1)) return true;
      taken &= ~(1u << j);
    }
    map[i] = -1;
    return false;
  };
  return place(0);
}

std::vector<Graph> near_triangulations(int n, int quads, long* leaves) {
  std::vector<Graph> reps;
  if (n < 4) return reps;
  const int target = 3 * n - 6 - quads;
  const int faces = target - n + 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int total = static_cast<int>(pairs.size());

  Graph g(n, 0);
  int used = 0;

  auto accept = [&]() {
    if (leaves) ++*leaves;
    if (!three_connected(g)) return;
    const auto cycles = peripheral_cycles(g);
    if (static_cast<int>(cycles.size()) != faces) return;
    int q = 0;
    for (auto c : cycles) {
      const int len = std::popcount(c);
      if (len == 4) ++q;
      else if (len != 3) return;
    }
    if (q != quads) return;
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        if (!(g[v] >> w & 1)) continue;
        int on = 0;
        for (auto c : cycles)
          if ((c >> v & 1) && (c >> w & 1)) ++on;
        if (on != 2) return;
      }
    for (const auto& r : reps)
      if (isomorphic(r, g)) return;
    reps.push_back(g);
  };

  // decide pairs in order; row i is complete once pair index passes (i, n-1)
  std::function<void(int)> step = [&](int idx) {
    if (idx > 0) {
      const auto [pi, pj] = pairs[idx - 1];
      if (pj == n - 1) {
        const int d = std::popcount(g[pi]);
        if (d < 3) return;
        if (pi > 0 && d > std::popcount(g[pi - 1])) return;
        for (int w = pi + 1; w < n; ++w)
          if (std::popcount(g[w]) > d) return;
      }
    }
    if (used > target || used + (total - idx) < target) return;
    if (idx == total) {
      const int d = std::popcount(g[n - 1]);
      if (d >= 3 && d <= std::popcount(g[n - 2])) accept();
      return;
    }
    const auto [i, j] = pairs[idx];
    g[i] |= 1u << j;
    g[j] |= 1u << i;
    ++used;
    step(idx + 1);
    g[i] &= ~(1u << j);
    g[j] &= ~(1u << i);
    --used;
    step(idx + 1);
  };
  step(0);
  return reps;
}

Census census(int max_vertices, int quads) {
  Census out;
  for (int n = 4; n <= max_vertices; ++n)
    out.types[n] = static_cast<long>(near_triangulations(n, quads, &out.leaves).size());
  return out;
}

}  // namespace naive
