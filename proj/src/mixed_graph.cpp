#include "traag/mixed_graph.hpp"

#include <algorithm>
#include <sstream>

namespace traag {

int MixedGraph::add_vertex(const std::string& label) {
  auto it = index_.find(label);
  if (it != index_.end()) return it->second;
  int idx = static_cast<int>(vertices_.size());
  vertices_.push_back(label);
  index_.emplace(label, idx);
  return idx;
}

bool MixedGraph::has_vertex(const std::string& label) const {
  return index_.count(label) > 0;
}

int MixedGraph::vertex_index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "no vertex '" + label + "'");
  return it->second;
}

void MixedGraph::check_edge(int a, int b) const {
  if (a == b) throw Error(ErrorCode::LoopEdge, "loop at vertex '" + vertices_[a] + "'");
  auto key = std::minmax(a, b);
  if (undirected_.count({key.first, key.second}) || directed_.count({a, b}) ||
      directed_.count({b, a})) {
    throw Error(ErrorCode::DuplicateEdge,
                "vertices '" + vertices_[a] + "' and '" + vertices_[b] + "' already joined");
  }
}

void MixedGraph::add_undirected(const std::string& a, const std::string& b) {
  int i = add_vertex(a);
  int j = add_vertex(b);
  check_edge(i, j);
  undirected_.insert({std::min(i, j), std::max(i, j)});
}

void MixedGraph::add_directed(const std::string& tail, const std::string& head) {
  int i = add_vertex(tail);
  int j = add_vertex(head);
  check_edge(i, j);
  directed_.insert({i, j});
}

std::string_view component_kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::SingleVertex: return "vertex";
    case ComponentKind::Star: return "star";
    case ComponentKind::SinkStar: return "sink_star";
    case ComponentKind::OtherTree: return "tree";
    case ComponentKind::DirectedOther: return "directed_other";
    case ComponentKind::Cyclic: return "cyclic";
  }
  return "?";
}

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void syntax_error(int line_no, std::string_view line) {
  throw Error(ErrorCode::SyntaxError,
              "line " + std::to_string(line_no) + ": '" + std::string(line) + "'");
}

}  // namespace

MixedGraph parse_graph(std::string_view text, bool strict) {
  MixedGraph g;
  std::set<std::string> declared;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto toks = split_tokens(line);
    if (toks.empty()) continue;

    try {
      if (toks.size() == 2 && toks[0] == "vertex") {
        g.add_vertex(toks[1]);
        declared.insert(toks[1]);
      } else if (toks.size() == 3 && (toks[1] == "--" || toks[1] == "->")) {
        if (strict) {
          for (int k : {0, 2})
            if (!declared.count(toks[k]))
              throw Error(ErrorCode::UndeclaredVertex,
                          "line " + std::to_string(line_no) + ": vertex '" + toks[k] +
                              "' used before declaration");
        }
        if (toks[1] == "--")
          g.add_undirected(toks[0], toks[2]);
        else
          g.add_directed(toks[0], toks[2]);
      } else {
        syntax_error(line_no, line);
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::LoopEdge || e.code() == ErrorCode::DuplicateEdge)
        throw Error(e.code(), "line " + std::to_string(line_no) + ": '" + std::string(line) + "'");
      throw;
    }
  }
  return g;
}

MixedGraph underlying_graph(const MixedGraph& g) {
  MixedGraph out;
  for (const auto& v : g.vertices()) out.add_vertex(v);
  for (auto [a, b] : g.undirected_edges()) out.add_undirected(g.vertices()[a], g.vertices()[b]);
  for (auto [a, b] : g.directed_edges()) out.add_undirected(g.vertices()[a], g.vertices()[b]);
  return out;
}

MixedGraph induced_subgraph(const MixedGraph& g, const std::vector<std::string>& labels) {
  std::set<int> keep;
  for (const auto& label : labels) keep.insert(g.vertex_index(label));
  MixedGraph out;
  for (int i : keep) out.add_vertex(g.vertices()[i]);  // keep's order = g's order
  for (auto [a, b] : g.undirected_edges())
    if (keep.count(a) && keep.count(b)) out.add_undirected(g.vertices()[a], g.vertices()[b]);
  for (auto [a, b] : g.directed_edges())
    if (keep.count(a) && keep.count(b)) out.add_directed(g.vertices()[a], g.vertices()[b]);
  return out;
}

std::vector<MixedGraph> connected_components(const MixedGraph& g) {
  int n = static_cast<int>(g.vertex_count());
  std::vector<int> root(n);
  for (int i = 0; i < n; ++i) root[i] = i;
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  auto unite = [&](int a, int b) { root[find(a)] = find(b); };
  for (auto [a, b] : g.undirected_edges()) unite(a, b);
  for (auto [a, b] : g.directed_edges()) unite(a, b);

  // group vertices, then order components by their least label
  std::map<int, std::vector<std::string>> members;
  for (int i = 0; i < n; ++i) members[find(i)].push_back(g.vertices()[i]);
  std::vector<std::vector<std::string>> groups;
  for (auto& [_, labels] : members) groups.push_back(std::move(labels));
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) {
              return *std::min_element(a.begin(), a.end()) <
                     *std::min_element(b.begin(), b.end());
            });

  std::vector<MixedGraph> out;
  out.reserve(groups.size());
  for (const auto& labels : groups) out.push_back(induced_subgraph(g, labels));
  return out;
}

ComponentClass classify_component(const MixedGraph& g) {
  int n = static_cast<int>(g.vertex_count());
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "cannot classify an empty graph");
  if (connected_components(g).size() != 1)
    throw Error(ErrorCode::NotConnected, "component classification needs a connected graph");

  if (n == 1) return {ComponentKind::SingleVertex, 0};

  int edges = static_cast<int>(g.edge_count());
  if (edges >= n) return {ComponentKind::Cyclic, 0};
  // connected with n-1 edges: a tree from here on

  if (!g.directed_edges().empty()) {
    if (g.undirected_edges().empty()) {
      // sink star iff all edges share one head
      int head = g.directed_edges().begin()->second;
      bool sink = true;
      for (auto [_, h] : g.directed_edges())
        if (h != head) { sink = false; break; }
      if (sink) return {ComponentKind::SinkStar, n - 1};
    }
    return {ComponentKind::DirectedOther, 0};
  }

  // undirected tree: star iff at most one vertex has degree > 1
  std::vector<int> degree(n, 0);
  for (auto [a, b] : g.undirected_edges()) {
    ++degree[a];
    ++degree[b];
  }
  int big = static_cast<int>(std::count_if(degree.begin(), degree.end(),
                                           [](int d) { return d > 1; }));
  if (big <= 1) return {ComponentKind::Star, n - 1};
  return {ComponentKind::OtherTree, 0};
}

GraphShape graph_shape(const MixedGraph& g) {
  GraphShape shape;
  for (const auto& comp : connected_components(g)) {
    ComponentClass c = classify_component(comp);
    switch (c.kind) {
      case ComponentKind::SingleVertex: ++shape.isolated_count; break;
      case ComponentKind::Star: shape.star_sizes.push_back(c.leaf_count); break;
      case ComponentKind::SinkStar: shape.sink_star_sizes.push_back(c.leaf_count); break;
      case ComponentKind::OtherTree: ++shape.other_tree_count; break;
      case ComponentKind::DirectedOther: ++shape.directed_other_count; break;
      case ComponentKind::Cyclic: ++shape.cyclic_count; break;
    }
  }
  std::sort(shape.star_sizes.begin(), shape.star_sizes.end());
  std::sort(shape.sink_star_sizes.begin(), shape.sink_star_sizes.end());
  return shape;
}

bool contains_triangle(const MixedGraph& g) {
  int n = static_cast<int>(g.vertex_count());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  auto mark = [&](int a, int b) { adj[a][b] = adj[b][a] = true; };
  for (auto [a, b] : g.undirected_edges()) mark(a, b);
  for (auto [a, b] : g.directed_edges()) mark(a, b);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (adj[a][b])
        for (int c = b + 1; c < n; ++c)
          if (adj[a][c] && adj[b][c]) return true;
  return false;
}

std::string shape_formula(const GraphShape& shape) {
  if (shape.empty()) return "empty";
  std::vector<std::string> terms;
  if (shape.isolated_count == 1) terms.push_back("P_1");
  else if (shape.isolated_count > 1)
    terms.push_back(std::to_string(shape.isolated_count) + "P_1");
  for (int s : shape.star_sizes) terms.push_back("T_" + std::to_string(s));
  for (int s : shape.sink_star_sizes) terms.push_back("S_" + std::to_string(s));
  for (int i = 0; i < shape.other_tree_count; ++i) terms.push_back("tree");
  for (int i = 0; i < shape.directed_other_count; ++i) terms.push_back("directed_tree");
  for (int i = 0; i < shape.cyclic_count; ++i) terms.push_back("cyclic");
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += terms[i];
  }
  return out;
}

}  // namespace traag
