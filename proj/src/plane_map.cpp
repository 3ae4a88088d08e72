#include "orthocusp/plane_map.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "orthocusp/error.hpp"

namespace orthocusp {

int PlaneMap::edge_count() const {
  int sum = 0;
  for (const auto& r : rot) sum += static_cast<int>(r.size());
  return sum / 2;
}

int PlaneMap::position(int v, int w) const {
  const auto& r = rot[v];
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    if (r[i] == w) return i;
  return -1;
}

int PlaneMap::next(int v, int u) const {
  const auto& r = rot[v];
  const int i = position(v, u);
  return r[(i + 1) % r.size()];
}

std::vector<std::vector<int>> PlaneMap::faces() const {
  std::vector<std::vector<char>> seen(rot.size());
  for (std::size_t v = 0; v < rot.size(); ++v) seen[v].assign(rot[v].size(), 0);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < vertex_count(); ++v) {
    for (int i = 0; i < degree(v); ++i) {
      if (seen[v][i]) continue;
      std::vector<int> face;
      int a = v;
      int ia = i;
      while (!seen[a][ia]) {
        seen[a][ia] = 1;
        face.push_back(a);
        const int b = rot[a][ia];
        const int c = next(b, a);
        ia = position(b, c);
        a = b;
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

int PlaneMap::expand(int v, int start, int k) {
  const int d = degree(v);
  std::vector<int> window(k);
  for (int j = 0; j < k; ++j) window[j] = rot[v][(start + j) % d];
  const int x = vertex_count();
  rot.emplace_back();

  for (int j = 1; j + 1 < k; ++j) {
    auto& r = rot[window[j]];
    *std::find(r.begin(), r.end(), v) = x;
  }
  {
    auto& r = rot[window.front()];
    r.insert(std::find(r.begin(), r.end(), v), x);
  }
  {
    auto& r = rot[window.back()];
    r.insert(std::find(r.begin(), r.end(), v) + 1, x);
  }

  auto& rv = rot[v];
  for (int j = 1; j + 1 < k; ++j) rv.erase(std::find(rv.begin(), rv.end(), window[j]));
  rv.insert(std::find(rv.begin(), rv.end(), window.front()) + 1, x);

  auto& rx = rot[x];
  rx.push_back(v);
  rx.insert(rx.end(), window.begin(), window.end());
  return x;
}

void PlaneMap::remove_edge(int a, int b) {
  auto& ra = rot[a];
  ra.erase(std::find(ra.begin(), ra.end(), b));
  auto& rb = rot[b];
  rb.erase(std::find(rb.begin(), rb.end(), a));
}

namespace {

// Connectivity of the graph with up to two vertices deleted.
bool connected_without(const PlaneMap& m, int skip1, int skip2) {
  const int n = m.vertex_count();
  std::vector<char> mark(n, 0);
  int start = -1;
  int remaining = 0;
  for (int v = 0; v < n; ++v) {
    if (v == skip1 || v == skip2) continue;
    ++remaining;
    if (start < 0) start = v;
  }
  if (remaining == 0) return true;
  std::vector<int> stack{start};
  mark[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : m.rot[v]) {
      if (w == skip1 || w == skip2 || mark[w]) continue;
      mark[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == remaining;
}

}  // namespace

bool PlaneMap::is_connected() const { return connected_without(*this, -1, -1); }

bool PlaneMap::is_three_connected() const {
  const int n = vertex_count();
  if (n < 4) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!connected_without(*this, i, j)) return false;
  return true;
}

CanonicalLabelling canonical_labelling(const PlaneMap& map,
                                       const std::vector<std::uint8_t>& colors) {
  const int n = map.vertex_count();
  auto color = [&](int v) -> int { return colors.empty() ? 0 : colors[v]; };
  auto key = [&](int v) { return std::pair{color(v), map.degree(v)}; };

  // Only darts whose (tail, head) keys are minimal can start the search.
  std::pair<std::pair<int, int>, std::pair<int, int>> best_key{{1 << 30, 0}, {0, 0}};
  for (int v = 0; v < n; ++v)
    for (int w : map.rot[v]) best_key = std::min(best_key, std::pair{key(v), key(w)});

  std::vector<std::uint16_t> best;
  std::vector<std::uint16_t> cur;
  std::vector<int> number(n);
  std::vector<int> best_number;
  std::vector<int> first(n);
  std::vector<int> order;
  bool best_mirrored = false;
  const std::uint16_t header[2] = {static_cast<std::uint16_t>(n),
                                   static_cast<std::uint16_t>(map.edge_count())};

  for (int s = 0; s < n; ++s) {
    if (key(s) != best_key.first) continue;
    for (int t : map.rot[s]) {
      if (key(t) != best_key.second) continue;
      for (int dir : {1, -1}) {
        cur.clear();
        // 0: equal to best so far, -1: already smaller.
        int state = best.empty() ? -1 : 0;
        auto emit = [&](std::uint16_t value) {
          if (state == 0) {
            const std::uint16_t b = best[cur.size()];
            if (value < b) state = -1;
            else if (value > b) state = 1;
          }
          cur.push_back(value);
          return state != 1;
        };
        bool alive = emit(header[0]) && emit(header[1]);
        std::fill(number.begin(), number.end(), 0);
        order.clear();
        number[s] = 1;
        first[s] = t;
        order.push_back(s);
        for (std::size_t qi = 0; alive && qi < order.size(); ++qi) {
          const int v = order[qi];
          alive = emit(static_cast<std::uint16_t>(color(v)));
          const int d = map.degree(v);
          const int p0 = map.position(v, first[v]);
          for (int j = 0; alive && j < d; ++j) {
            const int w = map.rot[v][((p0 + dir * j) % d + d) % d];
            if (number[w] == 0) {
              number[w] = static_cast<int>(order.size()) + 1;
              first[w] = v;
              order.push_back(w);
            }
            alive = emit(static_cast<std::uint16_t>(number[w]));
          }
          if (alive) alive = emit(0);
        }
        if (!alive) continue;
        if (state == -1) {
          best.swap(cur);
          best_number = number;
          best_mirrored = dir < 0;
        }
      }
    }
  }

  CanonicalLabelling out;
  out.code.reserve(best.size() * 2);
  for (std::uint16_t value : best) {
    out.code.push_back(static_cast<char>(value >> 8));
    out.code.push_back(static_cast<char>(value & 0xff));
  }
  out.number.resize(n);
  for (int v = 0; v < n; ++v) out.number[v] = best_number.empty() ? v : best_number[v] - 1;
  out.mirrored = best_mirrored;
  return out;
}

PlaneMap map_from_faces(int vertex_count, const std::vector<std::vector<int>>& faces) {
  // succ[v][u] = w for every face walk u -> v -> w.
  std::vector<std::map<int, int>> succ(vertex_count);
  for (const auto& f : faces) {
    const int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) {
      const int u = f[i];
      const int v = f[(i + 1) % k];
      const int w = f[(i + 2) % k];
      if (!succ[v].emplace(u, w).second)
        throw PreconditionError("vertex " + std::to_string(v) + " has an inconsistent link");
    }
  }
  PlaneMap m;
  m.rot.resize(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    if (succ[v].empty()) continue;
    int u = succ[v].begin()->first;
    const int u0 = u;
    do {
      m.rot[v].push_back(u);
      auto it = succ[v].find(u);
      if (it == succ[v].end())
        throw PreconditionError("vertex " + std::to_string(v) + " has an open link");
      u = it->second;
    } while (u != u0 && m.rot[v].size() <= succ[v].size());
    if (m.rot[v].size() != succ[v].size())
      throw PreconditionError("link of vertex " + std::to_string(v) + " is not a single cycle");
  }
  return m;
}

PlaneMap tetrahedron_map() {
  return map_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

}  // namespace orthocusp
