#include "apack/flow.hpp"

#include <algorithm>
#include <queue>

namespace apack {

namespace {

struct Arc {
  int to;
  int rev;   // index of the reverse arc in g[to]
  int cap;
  bool forward;
};

struct Dinic {
  std::vector<std::vector<Arc>> g;
  std::vector<int> level;
  std::vector<size_t> iter;

  explicit Dinic(int nodes) : g(static_cast<size_t>(nodes)), level(static_cast<size_t>(nodes)), iter(static_cast<size_t>(nodes)) {}

  void add_arc(int from, int to, int cap) {
    g[static_cast<size_t>(from)].push_back({to, static_cast<int>(g[static_cast<size_t>(to)].size()), cap, true});
    g[static_cast<size_t>(to)].push_back({from, static_cast<int>(g[static_cast<size_t>(from)].size()) - 1, 0, false});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[static_cast<size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& e : g[static_cast<size_t>(v)])
        if (e.cap > 0 && level[static_cast<size_t>(e.to)] < 0) {
          level[static_cast<size_t>(e.to)] = level[static_cast<size_t>(v)] + 1;
          q.push(e.to);
        }
    }
    return level[static_cast<size_t>(t)] >= 0;
  }

  int dfs(int v, int t, int f) {
    if (v == t) return f;
    for (size_t& i = iter[static_cast<size_t>(v)]; i < g[static_cast<size_t>(v)].size(); ++i) {
      Arc& e = g[static_cast<size_t>(v)][i];
      if (e.cap <= 0 || level[static_cast<size_t>(v)] + 1 != level[static_cast<size_t>(e.to)]) continue;
      int pushed = dfs(e.to, t, std::min(f, e.cap));
      if (pushed > 0) {
        e.cap -= pushed;
        g[static_cast<size_t>(e.to)][static_cast<size_t>(e.rev)].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  int max_flow(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (int pushed = dfs(s, t, 1 << 29)) flow += pushed;
    }
    return flow;
  }
};

// Vertex-split network: in(v) = 2v, out(v) = 2v+1, source = 2n, sink = 2n+1.
// Internal arcs carry capacity 1; all other arcs are effectively unbounded so
// every finite cut consists of internal arcs, i.e. is a vertex separator.
struct SplitNetwork {
  int n;
  int source;
  int sink;
  Dinic net;

  SplitNetwork(const Graph& graph, const VertexSet& a, const VertexSet& b)
      : n(graph.vertex_count()), source(2 * n), sink(2 * n + 1), net(2 * n + 2) {
    const int big = n + 1;
    for (int v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, 1);
    for (int u = 0; u < n; ++u)
      for (int v : graph.neighbors(u)) net.add_arc(2 * u + 1, 2 * v, big);
    for (int v : a) net.add_arc(source, 2 * v, big);
    for (int v : b) net.add_arc(2 * v + 1, sink, big);
  }

  int run() { return net.max_flow(source, sink); }
};

// Walks flow units source-to-sink, lowest insertion order first, and converts
// each split-node walk back to a vertex sequence.
std::vector<std::vector<int>> decompose(SplitNetwork& s, int flow) {
  auto& g = s.net.g;
  std::vector<std::vector<int>> remaining(g.size());
  for (size_t v = 0; v < g.size(); ++v) {
    remaining[v].resize(g[v].size(), 0);
    for (size_t i = 0; i < g[v].size(); ++i) {
      const Arc& e = g[v][i];
      if (e.forward) remaining[v][i] = g[static_cast<size_t>(e.to)][static_cast<size_t>(e.rev)].cap;
    }
  }
  std::vector<std::vector<int>> paths;
  for (int unit = 0; unit < flow; ++unit) {
    std::vector<int> nodes;
    int cur = s.source;
    while (cur != s.sink) {
      size_t pick = g[static_cast<size_t>(cur)].size();
      for (size_t i = 0; i < g[static_cast<size_t>(cur)].size(); ++i)
        if (remaining[static_cast<size_t>(cur)][i] > 0) {
          pick = i;
          break;
        }
      if (pick == g[static_cast<size_t>(cur)].size())
        throw invariant_error("flow decomposition ran out of arcs");
      --remaining[static_cast<size_t>(cur)][pick];
      cur = g[static_cast<size_t>(cur)][pick].to;
      nodes.push_back(cur);
    }
    std::vector<int> path;
    for (int node : nodes)
      if (node < 2 * s.n && node % 2 == 0) path.push_back(node / 2);
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace

int flow_value(const Graph& g, const VertexSet& a_in, const VertexSet& b_in) {
  VertexSet a = canonical_set(g, a_in);
  VertexSet b = canonical_set(g, b_in);
  if (a.empty() || b.empty()) return 0;
  SplitNetwork s(g, a, b);
  return s.run();
}

PathSystem max_disjoint_paths(const Graph& g, const VertexSet& a_in, const VertexSet& b_in) {
  VertexSet a = canonical_set(g, a_in);
  VertexSet b = canonical_set(g, b_in);
  PathSystem out;
  if (a.empty() || b.empty()) {
    out.vertex_disjoint = true;
    out.pairwise_anticomplete = true;
    return out;
  }
  SplitNetwork s(g, a, b);
  int flow = s.run();
  out.paths = decompose(s, flow);
  out.vertex_disjoint = true;
  out.pairwise_anticomplete = paths_pairwise_anticomplete(g, out.paths);
  return out;
}

SeparatorCertificate min_separator(const Graph& g, const VertexSet& a_in, const VertexSet& b_in) {
  VertexSet a = canonical_set(g, a_in);
  VertexSet b = canonical_set(g, b_in);
  SeparatorCertificate cert;
  if (a.empty() || b.empty()) return cert;
  SplitNetwork s(g, a, b);
  int flow = s.run();
  // residual reachability from the source
  std::vector<char> reach(s.net.g.size(), 0);
  std::queue<int> q;
  reach[static_cast<size_t>(s.source)] = 1;
  q.push(s.source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const Arc& e : s.net.g[static_cast<size_t>(v)])
      if (e.cap > 0 && !reach[static_cast<size_t>(e.to)]) {
        reach[static_cast<size_t>(e.to)] = 1;
        q.push(e.to);
      }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (reach[static_cast<size_t>(2 * v)] && !reach[static_cast<size_t>(2 * v + 1)])
      cert.vertices.push_back(v);
  if (static_cast<int>(cert.vertices.size()) != flow)
    throw invariant_error("min cut readout does not match the flow value");
  return cert;
}

bool is_separator(const Graph& g, const VertexSet& a_in, const VertexSet& b_in, const VertexSet& s_in) {
  VertexSet a = canonical_set(g, a_in);
  VertexSet b = canonical_set(g, b_in);
  VertexSet s = canonical_set(g, s_in);
  std::vector<char> blocked(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : s) blocked[static_cast<size_t>(v)] = 1;
  std::vector<char> target(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : b) target[static_cast<size_t>(v)] = 1;
  std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
  std::queue<int> q;
  for (int v : a)
    if (!blocked[static_cast<size_t>(v)]) {
      if (target[static_cast<size_t>(v)]) return false;  // one-vertex path survives
      visited[static_cast<size_t>(v)] = 1;
      q.push(v);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (blocked[static_cast<size_t>(w)] || visited[static_cast<size_t>(w)]) continue;
      if (target[static_cast<size_t>(w)]) return false;
      visited[static_cast<size_t>(w)] = 1;
      q.push(w);
    }
  }
  return true;
}

bool paths_pairwise_anticomplete(const Graph& g, const std::vector<std::vector<int>>& paths) {
  std::vector<int> owner(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < paths.size(); ++i)
    for (int v : paths[i]) {
      if (v < 0 || v >= g.vertex_count()) throw input_error("path vertex out of range");
      if (owner[static_cast<size_t>(v)] != -1)
        throw input_error("paths are not vertex-disjoint");
      owner[static_cast<size_t>(v)] = static_cast<int>(i);
    }
  for (const auto& [u, v] : g.edges()) {
    int ou = owner[static_cast<size_t>(u)];
    int ov = owner[static_cast<size_t>(v)];
    if (ou != -1 && ov != -1 && ou != ov) return false;
  }
  return true;
}

PathSystemCheck check_path_system(const Graph& g, const VertexSet& a_in, const VertexSet& b_in,
                                  const std::vector<std::vector<int>>& paths) {
  VertexSet a = canonical_set(g, a_in);
  VertexSet b = canonical_set(g, b_in);
  PathSystemCheck out;
  out.paths_valid = true;
  out.endpoints_ok = true;
  for (const auto& path : paths) {
    if (path.empty()) {
      out.paths_valid = false;
      continue;
    }
    std::vector<int> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0 || sorted.back() >= g.vertex_count() ||
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.paths_valid = false;
      continue;
    }
    for (size_t i = 0; i + 1 < path.size(); ++i)
      if (!g.has_edge(path[i], path[i + 1])) out.paths_valid = false;
    if (!set_contains(a, path.front()) || !set_contains(b, path.back()))
      out.endpoints_ok = false;
  }
  if (!out.paths_valid) return out;
  std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
  out.vertex_disjoint = true;
  for (const auto& path : paths)
    for (int v : path) {
      if (used[static_cast<size_t>(v)]) out.vertex_disjoint = false;
      used[static_cast<size_t>(v)] = 1;
    }
  if (out.vertex_disjoint)
    out.pairwise_anticomplete = paths_pairwise_anticomplete(g, paths);
  return out;
}

}  // namespace apack
