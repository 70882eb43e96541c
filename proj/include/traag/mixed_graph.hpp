#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "traag/error.hpp"

namespace traag {

/// A finite simple graph with a subset of its edges oriented.
///
/// Vertices are string labels kept in first-appearance order; each unordered
/// vertex pair carries at most one edge total, undirected or directed, and
/// loops are rejected. A directed edge is stored as (tail, head).
class MixedGraph {
 public:
  MixedGraph() = default;

  /// Registers a vertex if new; returns its index either way.
  int add_vertex(const std::string& label);

  /// Both endpoints are auto-registered. Throws LoopEdge / DuplicateEdge.
  void add_undirected(const std::string& a, const std::string& b);
  void add_directed(const std::string& tail, const std::string& head);

  bool has_vertex(const std::string& label) const;
  /// Throws UnknownVertex.
  int vertex_index(const std::string& label) const;

  const std::vector<std::string>& vertices() const { return vertices_; }
  /// Index pairs with first < second.
  const std::set<std::pair<int, int>>& undirected_edges() const { return undirected_; }
  /// Index pairs (tail, head).
  const std::set<std::pair<int, int>>& directed_edges() const { return directed_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return undirected_.size() + directed_.size(); }

  bool operator==(const MixedGraph& other) const {
    return vertices_ == other.vertices_ && undirected_ == other.undirected_ &&
           directed_ == other.directed_;
  }

 private:
  void check_edge(int a, int b) const;

  std::vector<std::string> vertices_;
  std::map<std::string, int> index_;
  std::set<std::pair<int, int>> undirected_;
  std::set<std::pair<int, int>> directed_;
};

enum class ComponentKind {
  SingleVertex,
  Star,          // K_{1,n}, all edges undirected
  SinkStar,      // n directed edges sharing one head
  OtherTree,     // undirected tree, neither vertex nor star
  DirectedOther, // tree with a directed edge, not a sink star
  Cyclic,        // underlying graph contains a cycle
};

std::string_view component_kind_name(ComponentKind k);

struct ComponentClass {
  ComponentKind kind = ComponentKind::SingleVertex;
  int leaf_count = 0;  // n for Star/SinkStar, 0 otherwise

  bool operator==(const ComponentClass&) const = default;
};

/// Component census of a mixed graph, the shape the embedding theorems read.
struct GraphShape {
  int isolated_count = 0;
  std::vector<int> star_sizes;       // ascending
  std::vector<int> sink_star_sizes;  // ascending
  int other_tree_count = 0;
  int directed_other_count = 0;
  int cyclic_count = 0;

  /// True iff some acyclic component carries a directed edge.
  bool has_directed_tree_component() const {
    return !sink_star_sizes.empty() || directed_other_count > 0;
  }
  int component_count() const {
    return isolated_count + static_cast<int>(star_sizes.size()) +
           static_cast<int>(sink_star_sizes.size()) + other_tree_count +
           directed_other_count + cyclic_count;
  }
  bool empty() const { return component_count() == 0; }

  bool operator==(const GraphShape&) const = default;
};

/// Parses the line format: `vertex <label>`, `<a> -- <b>`, `<a> -> <b>`;
/// `#` starts a comment, blank lines are skipped. In strict mode every edge
/// endpoint must be declared by an earlier `vertex` line.
MixedGraph parse_graph(std::string_view text, bool strict = false);

/// Forgets all orientations.
MixedGraph underlying_graph(const MixedGraph& g);

/// Subgraph spanned by `labels` with every edge whose endpoints both survive.
MixedGraph induced_subgraph(const MixedGraph& g, const std::vector<std::string>& labels);

/// Components of the underlying graph, ordered by least vertex label.
std::vector<MixedGraph> connected_components(const MixedGraph& g);

/// Classifies a nonempty connected mixed graph. Throws EmptyGraph / NotConnected.
ComponentClass classify_component(const MixedGraph& g);

GraphShape graph_shape(const MixedGraph& g);

/// Three mutually adjacent vertices in the underlying graph.
bool contains_triangle(const MixedGraph& g);

/// Shape rendered as a disjoint-union formula, e.g. "2P_1 + T_2 + S_3".
std::string shape_formula(const GraphShape& shape);

}  // namespace traag
