#include "apack/generators.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace apack {

std::uint32_t rand_below(std::mt19937& rng, std::uint32_t bound) {
  if (bound == 0) throw input_error("rand_below: bound must be positive");
  const std::uint32_t limit = 0xFFFFFFFFu - 0xFFFFFFFFu % bound;
  std::uint32_t draw = rng();
  while (draw >= limit) draw = rng();
  return draw % bound;
}

Graph random_density_graph(int n, double density, std::uint32_t seed) {
  if (n < 0) throw input_error("vertex count must be non-negative");
  if (density < 0.0 || density > 1.0) throw input_error("density must lie in [0, 1]");
  std::mt19937 rng(seed);
  const std::uint64_t threshold = static_cast<std::uint64_t>(density * 4294967296.0);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<std::uint64_t>(rng()) < threshold) g.add_edge(u, v);
  return g;
}

Graph configuration_model(int n, int degree, std::uint32_t seed) {
  if (n < 0 || degree < 0) throw input_error("negative configuration model parameter");
  if (degree >= n && !(n == 0 && degree == 0))
    throw input_error("degree must be smaller than the vertex count");
  if ((static_cast<long long>(n) * degree) % 2 != 0)
    throw input_error("n * degree must be even");
  std::mt19937 rng(seed);
  std::vector<int> stubs;
  stubs.reserve(static_cast<size_t>(n) * static_cast<size_t>(degree));
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < degree; ++i) stubs.push_back(v);

  const int max_attempts = 100000;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // Fisher–Yates with rand_below keeps the stream reproducible
    for (size_t i = stubs.size(); i > 1; --i)
      std::swap(stubs[i - 1], stubs[rand_below(rng, static_cast<std::uint32_t>(i))]);
    Graph g(n);
    bool simple = true;
    for (size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v || g.has_edge(u, v))
        simple = false;
      else
        g.add_edge(u, v);
    }
    if (simple) return g;
  }
  throw budget_error("configuration model rejection sampling did not converge");
}

Graph grid_graph(int rows, int cols) {
  if (rows < 0 || cols < 0) throw input_error("grid dimensions must be non-negative");
  Graph g(rows * cols);
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  return g;
}

std::vector<int> sample_distinct(int n, int count, std::mt19937& rng) {
  if (count < 0 || count > n) throw input_error("sample_distinct: count out of range");
  std::vector<int> pool(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
  for (int i = 0; i < count; ++i) {
    std::uint32_t j = rand_below(rng, static_cast<std::uint32_t>(n - i));
    std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(i) + j]);
  }
  pool.resize(static_cast<size_t>(count));
  return pool;
}

}  // namespace apack
