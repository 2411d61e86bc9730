#include "apack/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace apack {

Graph::Graph(int n) {
  if (n < 0) throw input_error("vertex count must be non-negative");
  adj_.resize(static_cast<size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw input_error("vertex id " + std::to_string(v) + " out of range [0, " +
                      std::to_string(vertex_count()) + ")");
}

int Graph::edge_count() const {
  size_t total = 0;
  for (const auto& list : adj_) total += list.size();
  return static_cast<int>(total / 2);
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<size_t>(v)];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

int Graph::max_degree() const {
  size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return static_cast<int>(best);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adj_[static_cast<size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
  auto& us = adj_[static_cast<size_t>(u)];
  auto it = std::lower_bound(us.begin(), us.end(), v);
  if (it != us.end() && *it == v)
    throw input_error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  us.insert(it, v);
  auto& vs = adj_[static_cast<size_t>(v)];
  vs.insert(std::lower_bound(vs.begin(), vs.end(), u), u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[static_cast<size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet canonical_set(const Graph& g, VertexSet ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (!ids.empty() && (ids.front() < 0 || ids.back() >= g.vertex_count()))
    throw input_error("vertex set contains an id outside [0, " +
                      std::to_string(g.vertex_count()) + ")");
  return ids;
}

bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  std::vector<char> in_x(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : x) {
    if (v < 0 || v >= g.vertex_count()) throw input_error("neighborhood: id out of range");
    in_x[static_cast<size_t>(v)] = 1;
  }
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  VertexSet out;
  for (int v : x)
    for (int w : g.neighbors(v))
      if (!in_x[static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  return set_union(canonical_set(g, x), neighborhood(g, x));
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x_in) {
  VertexSet x = canonical_set(g, x_in);
  InducedSubgraph out;
  out.old_to_new.assign(static_cast<size_t>(g.vertex_count()), -1);
  out.new_to_old = x;
  for (size_t i = 0; i < x.size(); ++i) out.old_to_new[static_cast<size_t>(x[i])] = static_cast<int>(i);
  out.graph = Graph(static_cast<int>(x.size()));
  for (size_t i = 0; i < x.size(); ++i)
    for (int w : g.neighbors(x[i])) {
      int wn = out.old_to_new[static_cast<size_t>(w)];
      if (wn > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), wn);
    }
  return out;
}

ContractedGraph contract_sets(const Graph& g, const std::vector<VertexSet>& blobs_in) {
  const int n = g.vertex_count();
  std::vector<int> blob_index(static_cast<size_t>(n), -1);
  std::vector<VertexSet> blobs;
  blobs.reserve(blobs_in.size());
  for (size_t bi = 0; bi < blobs_in.size(); ++bi) {
    VertexSet blob = canonical_set(g, blobs_in[bi]);
    if (blob.empty()) throw input_error("cannot contract an empty vertex set");
    for (int v : blob) {
      if (blob_index[static_cast<size_t>(v)] != -1)
        throw input_error("contraction blobs overlap at vertex " + std::to_string(v));
      blob_index[static_cast<size_t>(v)] = static_cast<int>(bi);
    }
    // each blob must induce a connected subgraph
    std::vector<char> reached(blob.size(), 0);
    std::queue<int> q;
    q.push(blob[0]);
    reached[0] = 1;
    size_t count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        auto it = std::lower_bound(blob.begin(), blob.end(), w);
        if (it == blob.end() || *it != w) continue;
        size_t pos = static_cast<size_t>(it - blob.begin());
        if (!reached[pos]) {
          reached[pos] = 1;
          ++count;
          q.push(w);
        }
      }
    }
    if (count != blob.size())
      throw input_error("contraction blob is not connected");
    blobs.push_back(std::move(blob));
  }

  // untouched vertices first (ascending), then one vertex per blob
  ContractionMap map;
  map.origin_of.assign(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v)
    if (blob_index[static_cast<size_t>(v)] == -1) {
      map.origin_of[static_cast<size_t>(v)] = static_cast<int>(map.blob_of.size());
      map.blob_of.push_back({v});
    }
  for (const auto& blob : blobs) {
    int id = static_cast<int>(map.blob_of.size());
    for (int v : blob) map.origin_of[static_cast<size_t>(v)] = id;
    map.blob_of.push_back(blob);
  }

  Graph contracted(static_cast<int>(map.blob_of.size()));
  std::vector<std::pair<int, int>> merged;
  for (const auto& [u, v] : g.edges()) {
    int cu = map.origin_of[static_cast<size_t>(u)];
    int cv = map.origin_of[static_cast<size_t>(v)];
    if (cu != cv) merged.emplace_back(std::min(cu, cv), std::max(cu, cv));
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  for (const auto& [u, v] : merged) contracted.add_edge(u, v);
  return {std::move(contracted), std::move(map)};
}

Graph square_graph(const Graph& g) {
  const int n = g.vertex_count();
  Graph sq(n);
  std::vector<int> reach;
  for (int u = 0; u < n; ++u) {
    reach.clear();
    for (int w : g.neighbors(u)) {
      reach.push_back(w);
      for (int x : g.neighbors(w))
        if (x != u) reach.push_back(x);
    }
    std::sort(reach.begin(), reach.end());
    reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
    for (int v : reach)
      if (v > u) sq.add_edge(u, v);
  }
  return sq;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> visited(static_cast<size_t>(n), 0);
  std::vector<VertexSet> components;
  for (int root = 0; root < n; ++root) {
    if (visited[static_cast<size_t>(root)]) continue;
    VertexSet comp;
    std::queue<int> q;
    q.push(root);
    visited[static_cast<size_t>(root)] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!visited[static_cast<size_t>(w)]) {
          visited[static_cast<size_t>(w)] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  constexpr int kInf = 1 << 30;
  int best = kInf;
  std::vector<int> dist(static_cast<size_t>(n)), parent(static_cast<size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[static_cast<size_t>(root)] = 0;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (dist[static_cast<size_t>(v)] == -1) {
          dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
          parent[static_cast<size_t>(v)] = u;
          q.push(v);
        } else if (v != parent[static_cast<size_t>(u)]) {
          // closed walk through a non-tree edge; contains a cycle of this length
          best = std::min(best, dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(v)] + 1);
        }
      }
    }
  }
  if (best == kInf) return std::nullopt;
  return best;
}

DegeneracyResult degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
  std::vector<char> removed(static_cast<size_t>(n), 0);
  DegeneracyResult result;
  result.elimination_order.reserve(static_cast<size_t>(n));
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[static_cast<size_t>(v)] &&
          (pick == -1 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(pick)]))
        pick = v;
    result.degeneracy = std::max(result.degeneracy, deg[static_cast<size_t>(pick)]);
    result.elimination_order.push_back(pick);
    removed[static_cast<size_t>(pick)] = 1;
    for (int w : g.neighbors(pick))
      if (!removed[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
  }
  return result;
}

AnticompleteCheck anticomplete(const Graph& g, const VertexSet& x_in, const VertexSet& y_in) {
  VertexSet x = canonical_set(g, x_in);
  VertexSet y = canonical_set(g, y_in);
  AnticompleteCheck out;
  if (!set_intersection(x, y).empty()) {
    out.sets_overlap = true;
    return out;  // anticomplete stays false
  }
  std::vector<char> in_y(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : y) in_y[static_cast<size_t>(v)] = 1;
  for (int v : x)
    for (int w : g.neighbors(v))
      if (in_y[static_cast<size_t>(w)]) return out;
  out.anticomplete = true;
  return out;
}

}  // namespace apack
