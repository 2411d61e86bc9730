#include "apack/sparsify.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <unordered_map>

namespace apack {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

// (base)^(exp) clamped so the division above never underflows to 0 paths.
std::int64_t saturating_power(std::int64_t base, std::int64_t exp) {
  const std::int64_t cap = std::numeric_limits<std::int64_t>::max() / 2;
  std::int64_t result = 1;
  for (std::int64_t i = 0; i < exp; ++i) {
    if (result > cap / base) return cap;
    result *= base;
  }
  return result;
}

VertexSet replace_member(VertexSet set, int from, int to) {
  set.erase(std::remove(set.begin(), set.end(), from), set.end());
  set.push_back(to);
  std::sort(set.begin(), set.end());
  return set;
}

}  // namespace

GadgetedInstance attach_terminal_gadgets(const Graph& g, const VertexSet& a_in,
                                         const VertexSet& b_in) {
  VertexSet a = canonical_set(g, a_in);
  VertexSet b = canonical_set(g, b_in);

  // growable copy of the adjacency; new ids exceed all old ones, so plain
  // push_back keeps neighbor lists sorted
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    adj[static_cast<size_t>(v)].assign(nb.begin(), nb.end());
  }
  std::vector<GadgetRecord> records;

  auto attach = [&](int terminal, GadgetRecord::Side side) {
    int mid = static_cast<int>(adj.size());
    adj.emplace_back();
    int endpoint = static_cast<int>(adj.size());
    adj.emplace_back();
    adj[static_cast<size_t>(terminal)].push_back(mid);
    adj[static_cast<size_t>(mid)].push_back(terminal);
    adj[static_cast<size_t>(mid)].push_back(endpoint);
    adj[static_cast<size_t>(endpoint)].push_back(mid);
    records.push_back({terminal, mid, endpoint, side});
    return endpoint;
  };

  // a vertex on both sides always gets one gadget per side, so the gadgeted
  // instance never has a common terminal
  for (int v : set_intersection(a, b)) {
    a = replace_member(std::move(a), v, attach(v, GadgetRecord::Side::A));
    b = replace_member(std::move(b), v, attach(v, GadgetRecord::Side::B));
  }

  auto violates = [&](int v) {
    if (adj[static_cast<size_t>(v)].size() > 1) return true;
    for (int w : adj[static_cast<size_t>(v)])
      if (adj[static_cast<size_t>(w)].size() > 2) return true;
    return false;
  };

  // Gadgeting a terminal raises its old degree by one, which can newly
  // violate a neighboring terminal, hence the fixpoint loop.
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexSet* side : {&a, &b}) {
      const auto tag = side == &a ? GadgetRecord::Side::A : GadgetRecord::Side::B;
      VertexSet snapshot = *side;
      for (int v : snapshot)
        if (violates(v)) {
          *side = replace_member(std::move(*side), v, attach(v, tag));
          changed = true;
        }
    }
  }

  Graph out(static_cast<int>(adj.size()));
  for (int u = 0; u < static_cast<int>(adj.size()); ++u)
    for (int v : adj[static_cast<size_t>(u)])
      if (u < v) out.add_edge(u, v);
  return {std::move(out), std::move(a), std::move(b), std::move(records)};
}

PathSystem strip_gadgets(const PathSystem& system, const std::vector<GadgetRecord>& records) {
  std::unordered_map<int, const GadgetRecord*> by_endpoint;
  for (const auto& rec : records) by_endpoint[rec.endpoint] = &rec;

  PathSystem out;
  out.vertex_disjoint = system.vertex_disjoint;
  out.pairwise_anticomplete = system.pairwise_anticomplete;
  for (const auto& original : system.paths) {
    std::vector<int> path = original;
    if (path.empty()) throw invariant_error("strip_gadgets: empty path");
    if (auto it = by_endpoint.find(path.front()); it != by_endpoint.end()) {
      const GadgetRecord& rec = *it->second;
      if (rec.side != GadgetRecord::Side::A || path.size() < 3 || path[1] != rec.mid ||
          path[2] != rec.original_terminal)
        throw invariant_error("strip_gadgets: path head does not match its gadget");
      path.erase(path.begin(), path.begin() + 2);
    }
    if (auto it = by_endpoint.find(path.back()); it != by_endpoint.end()) {
      const GadgetRecord& rec = *it->second;
      size_t len = path.size();
      if (rec.side != GadgetRecord::Side::B || len < 3 || path[len - 2] != rec.mid ||
          path[len - 3] != rec.original_terminal)
        throw invariant_error("strip_gadgets: path tail does not match its gadget");
      path.resize(len - 2);
    }
    out.paths.push_back(std::move(path));
  }
  return out;
}

std::vector<VertexSet> partition_distance3(const Graph& g, const VertexSet& y_in) {
  VertexSet y = canonical_set(g, y_in);
  const int n = g.vertex_count();
  std::vector<char> in_y(static_cast<size_t>(n), 0);
  for (int v : y) in_y[static_cast<size_t>(v)] = 1;
  std::vector<int> color(static_cast<size_t>(n), -1);
  int colors = 0;
  std::vector<char> used;
  for (int u : y) {
    used.assign(static_cast<size_t>(colors) + 1, 0);
    // forbid colors already present within distance 2 in g
    for (int w : g.neighbors(u)) {
      if (in_y[static_cast<size_t>(w)] && color[static_cast<size_t>(w)] >= 0)
        used[static_cast<size_t>(color[static_cast<size_t>(w)])] = 1;
      for (int x : g.neighbors(w))
        if (x != u && in_y[static_cast<size_t>(x)] && color[static_cast<size_t>(x)] >= 0)
          used[static_cast<size_t>(color[static_cast<size_t>(x)])] = 1;
    }
    int c = 0;
    while (used[static_cast<size_t>(c)]) ++c;
    color[static_cast<size_t>(u)] = c;
    colors = std::max(colors, c + 1);
  }
  std::vector<VertexSet> classes(static_cast<size_t>(colors));
  for (int u : y) classes[static_cast<size_t>(color[static_cast<size_t>(u)])].push_back(u);
  return classes;
}

std::vector<int> expand_contracted_path(const std::vector<int>& path, const ContractionMap& map,
                                        const Graph& g) {
  if (path.empty()) throw input_error("expand_contracted_path: empty path");
  const int contracted_n = static_cast<int>(map.blob_of.size());
  for (int c : path)
    if (c < 0 || c >= contracted_n)
      throw input_error("expand_contracted_path: id out of range");
  auto blob = [&](int c) -> const VertexSet& { return map.blob_of[static_cast<size_t>(c)]; };
  if (blob(path.front()).size() > 1 || blob(path.back()).size() > 1)
    throw input_error("expand_contracted_path: path endpoints must be uncontracted vertices");

  // lowest-id member of `candidates` adjacent to x, or -1
  auto pick_adjacent_to_vertex = [&](const VertexSet& candidates, int x) {
    for (int v : candidates)
      if (g.has_edge(v, x)) return v;
    return -1;
  };
  auto pick_adjacent_to_set = [&](const VertexSet& candidates, const VertexSet& targets) {
    for (int v : candidates)
      for (int t : targets)
        if (g.has_edge(v, t)) return v;
    return -1;
  };

  // shortest route between two blob members staying inside the blob,
  // BFS in ascending id order
  auto inner_route = [&](const VertexSet& members, int from, int to) {
    std::vector<int> parent(members.size(), -1);
    std::vector<char> seen(members.size(), 0);
    auto index_of = [&](int v) {
      return static_cast<size_t>(std::lower_bound(members.begin(), members.end(), v) -
                                 members.begin());
    };
    std::queue<int> q;
    seen[index_of(from)] = 1;
    q.push(from);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (v == to) break;
      for (int w : g.neighbors(v)) {
        if (!set_contains(members, w)) continue;
        size_t wi = index_of(w);
        if (!seen[wi]) {
          seen[wi] = 1;
          parent[wi] = v;
          q.push(w);
        }
      }
    }
    if (!seen[index_of(to)])
      throw invariant_error("expand_contracted_path: blob route not found");
    std::vector<int> route;
    for (int v = to; v != -1; v = parent[index_of(v)]) route.push_back(v);
    std::reverse(route.begin(), route.end());
    return route;
  };

  std::vector<int> out;
  for (size_t idx = 0; idx < path.size(); ++idx) {
    const VertexSet& members = blob(path[idx]);
    if (members.size() == 1) {
      int v = members[0];
      if (!out.empty() && !g.has_edge(out.back(), v))
        throw invariant_error("expand_contracted_path: non-adjacent step");
      out.push_back(v);
      continue;
    }
    int entry = pick_adjacent_to_vertex(members, out.back());
    if (entry == -1) throw invariant_error("expand_contracted_path: no entry into blob");
    const VertexSet& next = blob(path[idx + 1]);
    int exit = next.size() == 1 ? pick_adjacent_to_vertex(members, next[0])
                                : pick_adjacent_to_set(members, next);
    if (exit == -1) throw invariant_error("expand_contracted_path: no exit from blob");
    for (int v : inner_route(members, entry, exit)) out.push_back(v);
  }

  VertexSet distinct(out.begin(), out.end());
  std::sort(distinct.begin(), distinct.end());
  if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end())
    throw invariant_error("expand_contracted_path: expansion revisits a vertex");
  return out;
}

SparsifyRoundResult sparsify_round(const Graph& g, const VertexSet& a_in, const VertexSet& b_in,
                                   const VertexSet& i_in) {
  VertexSet a = canonical_set(g, a_in);
  VertexSet b = canonical_set(g, b_in);
  VertexSet ind = canonical_set(g, i_in);
  const int n = g.vertex_count();

  VertexSet terminal_hull = closed_neighborhood(g, set_union(a, b));
  if (!set_intersection(ind, terminal_hull).empty())
    throw input_error("sparsify_round: I must avoid N[A ∪ B]");
  {
    std::vector<char> stamped(static_cast<size_t>(n), 0);
    for (int v : ind) {
      if (stamped[static_cast<size_t>(v)])
        throw input_error("sparsify_round: I is not distance-3 independent");
      stamped[static_cast<size_t>(v)] = 1;
      for (int w : g.neighbors(v)) {
        if (stamped[static_cast<size_t>(w)])
          throw input_error("sparsify_round: I is not distance-3 independent");
        stamped[static_cast<size_t>(w)] = 1;
      }
    }
  }

  SparsifyRoundResult result;
  result.stats.flow_before = flow_value(g, a, b);
  result.stats.max_degree = g.max_degree();
  result.stats.independent_size = static_cast<int>(ind.size());

  if (ind.empty()) {
    result.kept.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) result.kept[static_cast<size_t>(v)] = v;
    result.stats.flow_after = result.stats.flow_before;
    return result;
  }

  std::vector<VertexSet> blobs;
  blobs.reserve(ind.size());
  for (int v : ind) blobs.push_back(closed_neighborhood(g, {v}));
  ContractedGraph contracted = contract_sets(g, blobs);

  auto map_set = [&](const VertexSet& set) {
    VertexSet out;
    out.reserve(set.size());
    for (int v : set) out.push_back(contracted.map.origin_of[static_cast<size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
  };
  PathSystem routed = max_disjoint_paths(contracted.graph, map_set(a), map_set(b));

  std::vector<int> predecessor(static_cast<size_t>(n), -1);
  std::vector<int> successor(static_cast<size_t>(n), -1);
  std::vector<char> on_path(static_cast<size_t>(n), 0);
  for (const auto& contracted_path : routed.paths) {
    std::vector<int> path = expand_contracted_path(contracted_path, contracted.map, g);
    for (size_t j = 0; j < path.size(); ++j) {
      int v = path[j];
      if (on_path[static_cast<size_t>(v)])
        throw invariant_error("sparsify_round: expanded paths are not disjoint");
      on_path[static_cast<size_t>(v)] = 1;
      if (j > 0) predecessor[static_cast<size_t>(v)] = path[j - 1];
      if (j + 1 < path.size()) successor[static_cast<size_t>(v)] = path[j + 1];
    }
  }

  std::vector<char> removed(static_cast<size_t>(n), 0);
  for (int v : ind) {
    if (!on_path[static_cast<size_t>(v)]) {
      removed[static_cast<size_t>(v)] = 1;
      continue;
    }
    int u = predecessor[static_cast<size_t>(v)];
    int w = successor[static_cast<size_t>(v)];
    if (u == -1 || w == -1)
      throw invariant_error("sparsify_round: independent vertex cannot end a path");
    for (int x : g.neighbors(v))
      if (x != u && x != w) removed[static_cast<size_t>(x)] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (removed[static_cast<size_t>(v)] && on_path[static_cast<size_t>(v)])
      throw invariant_error("sparsify_round: deletion touched a routed path");

  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<size_t>(v)]) result.kept.push_back(v);

  InducedSubgraph sub = induced_subgraph(g, result.kept);
  auto remap = [&](const VertexSet& set) {
    VertexSet out;
    for (int v : set) {
      int nv = sub.old_to_new[static_cast<size_t>(v)];
      if (nv == -1) throw invariant_error("sparsify_round: terminal was deleted");
      out.push_back(nv);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  result.stats.flow_after = flow_value(sub.graph, remap(a), remap(b));
  if (result.stats.flow_after <
      ceil_div(result.stats.flow_before, static_cast<std::int64_t>(result.stats.max_degree) + 1))
    throw invariant_error("sparsify_round: flow dropped below the guaranteed bound");
  return result;
}

SparsifyResult sparsify_full(const Graph& g, const VertexSet& a_in, const VertexSet& b_in) {
  VertexSet a = canonical_set(g, a_in);
  VertexSet b = canonical_set(g, b_in);
  const int delta = g.max_degree();
  const int total_rounds = delta * delta + 1;

  VertexSet all(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
  VertexSet y = set_difference(all, closed_neighborhood(g, set_union(a, b)));

  std::vector<VertexSet> classes = partition_distance3(g, y);
  if (static_cast<int>(classes.size()) > total_rounds)
    throw invariant_error("distance-3 partition used more than delta^2 + 1 classes");
  classes.resize(static_cast<size_t>(total_rounds));  // pad with no-op rounds

  SparsifyResult result;
  result.report.delta_used = delta;
  int flow0 = flow_value(g, a, b);
  result.report.guarantee =
      flow0 == 0 ? 0 : ceil_div(flow0, saturating_power(delta + 1, total_rounds));

  Graph cur = g;
  VertexSet cur_a = a, cur_b = b;
  std::vector<int> to_original = all;
  for (const VertexSet& cls : classes) {
    // restrict the class to vertices alive in the current graph
    std::vector<char> alive(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> to_current(static_cast<size_t>(g.vertex_count()), -1);
    for (int v = 0; v < cur.vertex_count(); ++v) {
      alive[static_cast<size_t>(to_original[static_cast<size_t>(v)])] = 1;
      to_current[static_cast<size_t>(to_original[static_cast<size_t>(v)])] = v;
    }
    VertexSet round_set;
    for (int v : cls)
      if (alive[static_cast<size_t>(v)]) round_set.push_back(to_current[static_cast<size_t>(v)]);
    std::sort(round_set.begin(), round_set.end());

    SparsifyRoundResult round = sparsify_round(cur, cur_a, cur_b, round_set);
    result.report.rounds.push_back(round.stats);

    InducedSubgraph sub = induced_subgraph(cur, round.kept);
    auto remap = [&](const VertexSet& set) {
      VertexSet out;
      for (int v : set) out.push_back(sub.old_to_new[static_cast<size_t>(v)]);
      std::sort(out.begin(), out.end());
      return out;
    };
    cur_a = remap(cur_a);
    cur_b = remap(cur_b);
    std::vector<int> next_to_original(static_cast<size_t>(sub.graph.vertex_count()));
    for (int v = 0; v < sub.graph.vertex_count(); ++v)
      next_to_original[static_cast<size_t>(v)] =
          to_original[static_cast<size_t>(sub.new_to_old[static_cast<size_t>(v)])];
    to_original = std::move(next_to_original);
    cur = std::move(sub.graph);
  }

  result.kept = to_original;
  std::sort(result.kept.begin(), result.kept.end());

  // postcondition: outside N[A ∪ B] everything now has degree at most 2
  InducedSubgraph final_sub = induced_subgraph(g, result.kept);
  VertexSet hull = closed_neighborhood(g, set_union(a, b));
  for (int v : result.kept)
    if (!set_contains(hull, v) &&
        final_sub.graph.degree(final_sub.old_to_new[static_cast<size_t>(v)]) > 2)
      throw invariant_error("sparsify_full: vertex outside N[A ∪ B] kept degree above 2");
  return result;
}

BoundedDegreeSolution solve_bounded_degree(const Graph& g, const VertexSet& a_in,
                                           const VertexSet& b_in) {
  VertexSet a = canonical_set(g, a_in);
  VertexSet b = canonical_set(g, b_in);

  GadgetedInstance gadgeted = attach_terminal_gadgets(g, a, b);
  SparsifyResult sparsified = sparsify_full(gadgeted.graph, gadgeted.a, gadgeted.b);
  InducedSubgraph sub = induced_subgraph(gadgeted.graph, sparsified.kept);

  auto remap = [&](const VertexSet& set) {
    VertexSet out;
    for (int v : set) {
      int nv = sub.old_to_new[static_cast<size_t>(v)];
      if (nv == -1) throw invariant_error("solve_bounded_degree: terminal lost in sparsification");
      out.push_back(nv);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  PathSystem routed = max_disjoint_paths(sub.graph, remap(gadgeted.a), remap(gadgeted.b));
  for (auto& path : routed.paths)
    for (int& v : path) v = sub.new_to_old[static_cast<size_t>(v)];

  PathSystem stripped = strip_gadgets(routed, gadgeted.records);

  PathSystemCheck check = check_path_system(g, a, b, stripped.paths);
  if (!check.ok())
    throw invariant_error("solve_bounded_degree: output failed validation in the input graph");
  stripped.vertex_disjoint = check.vertex_disjoint;
  stripped.pairwise_anticomplete = check.pairwise_anticomplete;

  BoundedDegreeSolution out;
  out.paths = std::move(stripped);
  out.report = std::move(sparsified.report);
  if (out.report.initial_flow() == 0) out.separator = min_separator(g, a, b);
  if (static_cast<std::int64_t>(out.paths.paths.size()) < out.report.guarantee)
    throw invariant_error("solve_bounded_degree: returned fewer paths than guaranteed");
  return out;
}

}  // namespace apack
