#include "wl/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wl {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  g.edges_ = std::move(edges);
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& a : g.adj_) std::sort(a.begin(), a.end());
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u > v) std::swap(u, v);
  if (has_edge(u, v))
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  auto e = std::make_pair(u, v);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int w = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), w);
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

bool Graph::is_regular(int d) const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != d) return false;
  return true;
}

void Graph::set_vertex_color(int v, int color) {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
  if (colors_.empty()) colors_.assign(n_, 0);
  colors_[v] = color;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("bad permutation size");
  std::vector<std::pair<int, int>> es;
  es.reserve(edges_.size());
  for (auto [u, v] : edges_) es.emplace_back(perm[u], perm[v]);
  Graph g = from_edges(n_, std::move(es));
  if (!colors_.empty()) {
    g.colors_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) g.colors_[perm[v]] = colors_[v];
  }
  return g;
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  std::vector<int> verts = s;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (int v : verts)
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  Graph h(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

bool canonicity_condition(const Graph& g) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      if (v == w) continue;
      bool contained = true;
      for (int x : g.neighbors(v))
        if (x != w && !g.has_edge(w, x)) {
          contained = false;
          break;
        }
      if (contained) return false;  // N(v) subset of N[w]
    }
  return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  int off = a.vertex_count();
  for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);        // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);              // spokes
  }
  return g;
}

Graph read_graph(std::istream& in) {
  std::string line;
  int n = -1;
  std::size_t m = 0;
  if (!std::getline(in, line)) throw std::runtime_error("graph file: missing header");
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m) || n < 0) throw std::runtime_error("graph file: bad header");
  }
  std::vector<std::pair<int, int>> es;
  es.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("graph file: truncated edge list");
    std::istringstream ls(line);
    int u, v;
    if (!(ls >> u >> v)) throw std::runtime_error("graph file: bad edge line");
    es.emplace_back(u, v);
  }
  Graph g = Graph::from_edges(n, std::move(es));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream cs(line);
    std::string tag;
    int v, color;
    if (!(cs >> tag >> v >> color) || tag != "c")
      throw std::runtime_error("graph file: bad trailing line: " + line);
    g.set_vertex_color(v, color);
  }
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  if (g.has_vertex_colors())
    for (int v = 0; v < g.vertex_count(); ++v)
      out << "c " << v << " " << g.vertex_colors()[v] << "\n";
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write graph file " + path);
  write_graph(out, g);
}

}  // namespace wl
