#include "flashcodes/data_graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "flashcodes/error.hpp"

namespace flashcodes {

namespace {

std::vector<std::size_t> bfs_distances(const std::vector<std::vector<Vertex>>& adj, Vertex src) {
  constexpr auto kInf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(adj.size(), kInf);
  std::queue<Vertex> frontier;
  dist[src] = 0;
  frontier.push(src);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : adj[u]) {
      if (dist[v] == kInf) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

std::uint64_t checked_power(unsigned base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (out > DataGraph::kMaxVertices / base) {
      throw Error(ErrorKind::Overflow, std::to_string(base) + "^" + std::to_string(exp) + " exceeds the vertex limit");
    }
    out *= base;
  }
  return out;
}

}  // namespace

bool is_strongly_connected(const std::vector<std::vector<Vertex>>& adjacency) {
  if (adjacency.empty()) return false;
  auto reach = [](const std::vector<std::vector<Vertex>>& adj) {
    auto d = bfs_distances(adj, 0);
    return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == static_cast<std::size_t>(-1); });
  };
  std::vector<std::vector<Vertex>> reversed(adjacency.size());
  for (Vertex u = 0; u < adjacency.size(); ++u) {
    for (Vertex v : adjacency[u]) reversed[v].push_back(u);
  }
  return reach(adjacency) && reach(reversed);
}

DataGraph::DataGraph(std::vector<std::vector<Vertex>> adjacency, std::string name)
    : adjacency_(std::move(adjacency)), name_(std::move(name)) {
  const auto L = adjacency_.size();
  if (L < 2) throw Error(ErrorKind::InvalidArgument, "data graph needs at least 2 vertices");
  if (L > kMaxVertices) throw Error(ErrorKind::Overflow, "too many vertices");
  for (Vertex u = 0; u < L; ++u) {
    auto& out = adjacency_[u];
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (Vertex v : out) {
      if (v >= L) throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
      if (v == u) throw Error(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(u));
    }
    max_out_degree_ = std::max(max_out_degree_, out.size());
  }
  if (!is_strongly_connected(adjacency_)) {
    throw Error(ErrorKind::InvalidArgument, "data graph must be strongly connected");
  }
}

std::span<const Vertex> DataGraph::out_neighbors(Vertex u) const {
  if (u >= adjacency_.size()) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  return adjacency_[u];
}

std::uint64_t DataGraph::edge_count() const noexcept {
  std::uint64_t e = 0;
  for (const auto& out : adjacency_) e += out.size();
  return e;
}

bool DataGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
  const auto& out = adjacency_[u];
  return std::binary_search(out.begin(), out.end(), v);
}

bool DataGraph::is_complete() const noexcept { return max_out_degree_ + 1 == adjacency_.size() && edge_count() == adjacency_.size() * (adjacency_.size() - 1); }

Label DataGraph::edge_label(Vertex u, Vertex v) const {
  if (u >= adjacency_.size()) throw Error(ErrorKind::NotAnEdge, "vertex out of range");
  const auto& out = adjacency_[u];
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it == out.end() || *it != v) {
    throw Error(ErrorKind::NotAnEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  return static_cast<Label>(it - out.begin());
}

Vertex DataGraph::follow(Vertex u, Label label) const {
  const auto out = out_neighbors(u);
  if (label >= out.size()) {
    throw Error(ErrorKind::LabelOutOfRange,
                "label " + std::to_string(label) + " at vertex " + std::to_string(u) + " with out-degree " + std::to_string(out.size()));
  }
  return out[label];
}

std::size_t DataGraph::diameter() const {
  std::size_t best = 0;
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (std::size_t d : bfs_distances(adjacency_, u)) best = std::max(best, d);
  }
  return best;
}

std::string DataGraph::edge_list() const {
  std::ostringstream out;
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) out << u << ' ' << v << '\n';
  }
  return out.str();
}

DataGraph complete_graph(std::uint64_t L) {
  if (L < 2) throw Error(ErrorKind::InvalidArgument, "complete graph needs L >= 2");
  if (L > 4096) throw Error(ErrorKind::Overflow, "complete graph limited to 4096 vertices");
  std::vector<std::vector<Vertex>> adj(L);
  for (Vertex u = 0; u < L; ++u) {
    adj[u].reserve(L - 1);
    for (Vertex v = 0; v < L; ++v) {
      if (v != u) adj[u].push_back(v);
    }
  }
  return DataGraph(std::move(adj), "complete:L=" + std::to_string(L));
}

DataGraph hypercube_graph(unsigned k, unsigned ell) {
  if (k < 1 || ell < 2) throw Error(ErrorKind::InvalidArgument, "hypercube needs k >= 1 and ell >= 2");
  const std::uint64_t L = checked_power(ell, k);
  std::vector<std::vector<Vertex>> adj(L);
  for (Vertex u = 0; u < L; ++u) {
    std::uint64_t place = 1;  // weight of the coordinate being varied
    for (unsigned c = 0; c < k; ++c, place *= ell) {
      const std::uint64_t digit = (u / place) % ell;
      for (unsigned y = 0; y < ell; ++y) {
        if (y != digit) adj[u].push_back(u - digit * place + y * place);
      }
    }
  }
  return DataGraph(std::move(adj), "hypercube:k=" + std::to_string(k) + ",l=" + std::to_string(ell));
}

DataGraph debruijn_graph(unsigned k, unsigned ell) {
  if (k < 1 || ell < 2) throw Error(ErrorKind::InvalidArgument, "de Bruijn graph needs k >= 1 and ell >= 2");
  const std::uint64_t L = checked_power(ell, k);
  std::vector<std::vector<Vertex>> adj(L);
  for (Vertex u = 0; u < L; ++u) {
    const std::uint64_t shifted = (u * ell) % L;  // drop x_1, append a slot
    for (unsigned y = 0; y < ell; ++y) {
      const Vertex v = shifted + y;
      if (v != u) adj[u].push_back(v);
    }
  }
  return DataGraph(std::move(adj), "debruijn:k=" + std::to_string(k) + ",l=" + std::to_string(ell));
}

DataGraph bidirected_tree(unsigned delta, std::uint64_t L) {
  if (delta < 2 || L < 2) throw Error(ErrorKind::InvalidArgument, "tree needs delta >= 2 and L >= 2");
  if (L > DataGraph::kMaxVertices) throw Error(ErrorKind::Overflow, "too many vertices");
  // Level-order filling: the root takes up to delta children, every other
  // vertex up to delta-1 (one edge goes to its parent).
  std::vector<std::vector<Vertex>> adj(L);
  Vertex next = 1;
  for (Vertex parent = 0; parent < L && next < L; ++parent) {
    const unsigned slots = parent == 0 ? delta : delta - 1;
    if (slots == 0) {
      throw Error(ErrorKind::InvalidArgument, "degree bound too small to reach " + std::to_string(L) + " vertices");
    }
    for (unsigned s = 0; s < slots && next < L; ++s, ++next) {
      adj[parent].push_back(next);
      adj[next].push_back(parent);
    }
  }
  return DataGraph(std::move(adj), "tree:delta=" + std::to_string(delta) + ",L=" + std::to_string(L));
}

DataGraph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::pair<Vertex, Vertex>> edges;
  Vertex u = 0, v = 0, top = 0;
  while (in >> u >> v) {
    edges.emplace_back(u, v);
    top = std::max({top, u, v});
  }
  if (!in.eof()) throw Error(ErrorKind::InvalidArgument, "malformed edge list");
  if (top + 1 > DataGraph::kMaxVertices) throw Error(ErrorKind::Overflow, "too many vertices");
  std::vector<std::vector<Vertex>> adj(top + 1);
  for (auto [a, b] : edges) adj[a].push_back(b);
  return DataGraph(std::move(adj), "edgelist");
}

}  // namespace flashcodes
