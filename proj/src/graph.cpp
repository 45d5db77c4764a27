#include "symcov/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "symcov/errors.hpp"

namespace symcov {

Graph::Graph(int vertex_count) : adj_(vertex_count), labels_(vertex_count) {
  if (vertex_count <= 0)
    throw precondition_error("graph vertex count must be positive");
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw precondition_error("edge endpoint out of range");
  if (u == v) throw precondition_error("loops are not allowed");
  if (adjacent(u, v)) return;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edge_count_;
}

bool Graph::adjacent(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void Graph::set_label(int v, std::string label) { labels_[v] = std::move(label); }

const std::string& Graph::label(int v) const { return labels_[v]; }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

BlockPartition BlockPartition::from_blocks(int vertex_count,
                                           std::vector<std::vector<int>> blocks) {
  BlockPartition p;
  p.block_of.assign(vertex_count, -1);
  if (blocks.empty()) throw precondition_error("partition has no blocks");
  const std::size_t cell = blocks.front().size();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw precondition_error("empty partition block");
    if (blocks[b].size() != cell)
      throw precondition_error("partition blocks must have equal size");
    for (int v : blocks[b]) {
      if (v < 0 || v >= vertex_count)
        throw precondition_error("partition vertex out of range");
      if (p.block_of[v] != -1)
        throw precondition_error("partition blocks overlap");
      p.block_of[v] = static_cast<int>(b);
    }
  }
  for (int v = 0; v < vertex_count; ++v)
    if (p.block_of[v] == -1)
      throw precondition_error("partition does not cover all vertices");
  p.blocks = std::move(blocks);
  return p;
}

Graph quotient_graph(const Graph& g, const BlockPartition& b) {
  if (static_cast<int>(b.block_of.size()) != g.vertex_count())
    throw precondition_error("partition does not match the graph");
  Graph q(b.block_count());
  for (auto [u, v] : g.edges()) {
    int bu = b.block_of[u], bv = b.block_of[v];
    if (bu != bv) q.add_edge(bu, bv);
  }
  return q;
}

InducedBipartite induced_bipartite(const Graph& g, const std::vector<int>& block_a,
                                   const std::vector<int>& block_b) {
  std::set<int> a(block_a.begin(), block_a.end());
  for (int v : block_b)
    if (a.contains(v)) throw precondition_error("blocks overlap");
  std::map<int, int> relabel;
  int next = 0;
  for (int v : block_a) relabel[v] = next++;
  for (int v : block_b) relabel[v] = next++;
  InducedBipartite out{Graph(next), 0};
  auto count_intra = [&](const std::vector<int>& block) {
    std::set<int> members(block.begin(), block.end());
    int intra = 0;
    for (int u : block)
      for (int v : g.neighbors(u))
        if (u < v && members.contains(v)) ++intra;
    return intra;
  };
  out.intra_block_edges = count_intra(block_a) + count_intra(block_b);
  for (int u : block_a)
    for (int v : g.neighbors(u))
      if (relabel.contains(v) && !a.contains(v))
        out.graph.add_edge(relabel[u], relabel[v]);
  return out;
}

std::optional<int> is_regular(const Graph& g) {
  int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

bool is_perfect_matching_between(const Graph& g, const std::vector<int>& block_a,
                                 const std::vector<int>& block_b) {
  auto induced = induced_bipartite(g, block_a, block_b);
  auto d = is_regular(induced.graph);
  return d.has_value() && *d == 1;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (comp[start] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<int> queue{start};
    comp[start] = id;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      out[id].push_back(u);
      for (int v : g.neighbors(u))
        if (comp[v] == -1) {
          comp[v] = id;
          queue.push_back(v);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

std::pair<Graph, BlockPartition> lexicographic_blowup(const Graph& g, int m) {
  if (m < 1) throw precondition_error("blow-up multiplicity must be >= 1");
  const int n = g.vertex_count();
  Graph out(m * n);
  for (auto [u, v] : g.edges())
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) out.add_edge(i * n + u, j * n + v);
  std::vector<std::vector<int>> fibers(n);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < m; ++i) fibers[v].push_back(i * n + v);
  return {std::move(out), BlockPartition::from_blocks(m * n, std::move(fibers))};
}

namespace {

// 1-dimensional color refinement; returns stable colors, canonically numbered.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const int n = g.vertex_count();
  while (true) {
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      sig.reserve(g.degree(v));
      for (int w : g.neighbors(v)) sig.push_back(colors[w]);
      std::sort(sig.begin(), sig.end());
      classes[{colors[v], std::move(sig)}].push_back(v);
    }
    std::vector<int> next(n);
    int c = 0;
    for (const auto& [key, members] : classes) {
      for (int v : members) next[v] = c;
      ++c;
    }
    if (next == colors) return colors;
    colors = std::move(next);
  }
}

std::vector<int> color_histogram(const std::vector<int>& colors) {
  std::map<int, int> h;
  for (int c : colors) ++h[c];
  std::vector<int> out;
  for (auto [c, k] : h) {
    out.push_back(c);
    out.push_back(k);
  }
  return out;
}

bool extend_mapping(const Graph& a, const Graph& b, const std::vector<int>& ca,
                    const std::vector<int>& cb, const std::vector<int>& order,
                    std::size_t depth, std::vector<int>& map,
                    std::vector<char>& used) {
  if (depth == order.size()) return true;
  const int u = order[depth];
  for (int v = 0; v < b.vertex_count(); ++v) {
    if (used[v] || cb[v] != ca[u]) continue;
    bool ok = true;
    for (int w : a.neighbors(u)) {
      if (map[w] != -1 && !b.adjacent(v, map[w])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      // v must not be adjacent to any already-used vertex that is not the
      // image of a neighbor of u
      int mapped_nbrs_u = 0;
      for (int w : a.neighbors(u))
        if (map[w] != -1) ++mapped_nbrs_u;
      int mapped_nbrs_v = 0;
      for (int w : b.neighbors(v))
        if (used[w]) ++mapped_nbrs_v;
      if (mapped_nbrs_u != mapped_nbrs_v) ok = false;
    }
    if (!ok) continue;
    map[u] = v;
    used[v] = 1;
    if (extend_mapping(a, b, ca, cb, order, depth + 1, map, used)) return true;
    map[u] = -1;
    used[v] = 0;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() > 4096 || b.vertex_count() > 4096)
    throw capacity_error("isomorphism test capped at 4096 vertices");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  const int n = a.vertex_count();
  auto ca = refine_colors(a, std::vector<int>(n, 0));
  auto cb = refine_colors(b, std::vector<int>(n, 0));
  if (color_histogram(ca) != color_histogram(cb)) return false;

  // map vertices in BFS order (per component) so each new vertex is
  // constrained by already-mapped neighbors
  std::vector<int> order;
  order.reserve(n);
  {
    std::vector<char> seen(n, 0);
    for (int start = 0; start < n; ++start) {
      if (seen[start]) continue;
      std::deque<int> queue{start};
      seen[start] = 1;
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        order.push_back(u);
        for (int v : a.neighbors(u))
          if (!seen[v]) {
            seen[v] = 1;
            queue.push_back(v);
          }
      }
    }
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  return extend_mapping(a, b, ca, cb, order, 0, map, used);
}

std::string export_graph(const Graph& g, ExportFormat format) {
  std::ostringstream os;
  if (format == ExportFormat::Dot) {
    os << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
      os << "  v" << v;
      if (!g.label(v).empty()) os << " [label=\"" << g.label(v) << "\"]";
      os << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
  } else {
    os << "{\"vertices\":[";
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (v) os << ',';
      os << '"' << g.label(v) << '"';
    }
    os << "],\"edges\":[";
    bool first = true;
    for (auto [u, v] : g.edges()) {
      if (!first) os << ',';
      first = false;
      os << '[' << u << ',' << v << ']';
    }
    os << "]}";
  }
  return os.str();
}

}  // namespace symcov
