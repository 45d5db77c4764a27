#pragma once

#include <optional>
#include <string>
#include <vector>

namespace symcov {

/// Simple undirected graph; no loops, no multi-edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  void set_label(int v, std::string label);
  const std::string& label(int v) const;

  /// Sorted (u, v) pairs with u < v.
  std::vector<std::pair<int, int>> edges() const;

  static Graph cycle(int n);
  static Graph complete(int n);

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  int edge_count_ = 0;
};

/// Partition of the vertex set into equal-size nonempty cells.
struct BlockPartition {
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;

  static BlockPartition from_blocks(int vertex_count,
                                    std::vector<std::vector<int>> blocks);
  int block_count() const { return static_cast<int>(blocks.size()); }
};

/// One vertex per block; blocks adjacent iff some cross edge exists.
/// Intra-block edges are dropped.
Graph quotient_graph(const Graph& g, const BlockPartition& b);

struct InducedBipartite {
  Graph graph;                 // on block_a followed by block_b, cross edges only
  int intra_block_edges = 0;   // counted but excluded; nonzero triggers a warning
};

InducedBipartite induced_bipartite(const Graph& g,
                                   const std::vector<int>& block_a,
                                   const std::vector<int>& block_b);

/// Common vertex degree, or nullopt if degrees differ.
std::optional<int> is_regular(const Graph& g);

bool is_perfect_matching_between(const Graph& g, const std::vector<int>& block_a,
                                 const std::vector<int>& block_b);

std::vector<std::vector<int>> connected_components(const Graph& g);

/// Replace every vertex by m copies; (i,v) ~ (i',v') iff v ~ v'. Vertex (i,v)
/// gets index i*|V| + v. Returns the fiber partition {(.,v)} as blocks.
std::pair<Graph, BlockPartition> lexicographic_blowup(const Graph& g, int m);

/// Exact isomorphism via color refinement plus backtracking. Vertex counts
/// must not exceed 4096.
bool are_isomorphic(const Graph& a, const Graph& b);

enum class ExportFormat { Dot, Json };

std::string export_graph(const Graph& g, ExportFormat format);

}  // namespace symcov
