#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flashcodes/cell_state.hpp"

namespace flashcodes {

using Vertex = Value;
using Label = std::uint64_t;

/// Directed data graph on vertices 0..L-1. Out-neighbours of every vertex are
/// kept sorted ascending; the local label of edge (u, v) is the position of v
/// in that list, so labels run 0..outdeg(u)-1.
class DataGraph {
 public:
  static constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 22;

  /// Builds from adjacency lists. Rejects self-loops and graphs that are not
  /// strongly connected.
  DataGraph(std::vector<std::vector<Vertex>> adjacency, std::string name);

  std::uint64_t vertex_count() const noexcept { return adjacency_.size(); }
  std::span<const Vertex> out_neighbors(Vertex u) const;
  std::size_t out_degree(Vertex u) const { return out_neighbors(u).size(); }
  std::size_t max_out_degree() const noexcept { return max_out_degree_; }
  std::uint64_t edge_count() const noexcept;
  bool has_edge(Vertex u, Vertex v) const;
  bool is_complete() const noexcept;

  /// Local label of (u, v) at u. Throws NotAnEdge.
  Label edge_label(Vertex u, Vertex v) const;
  /// Inverse of edge_label. Throws LabelOutOfRange.
  Vertex follow(Vertex u, Label label) const;

  /// Longest shortest path over all ordered pairs (BFS from every vertex).
  std::size_t diameter() const;

  /// Spec string this graph was built from, e.g. "hypercube:k=4,l=2".
  const std::string& name() const noexcept { return name_; }

  /// "u v" per line, in label order.
  std::string edge_list() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t max_out_degree_ = 0;
  std::string name_;
};

DataGraph complete_graph(std::uint64_t L);
/// k variables over an alphabet of size ell; vertices are mixed-radix tuples,
/// most significant coordinate first.
DataGraph hypercube_graph(unsigned k, unsigned ell);
/// FIFO of k items over an alphabet of size ell; self-shifts are dropped.
DataGraph debruijn_graph(unsigned k, unsigned ell);
/// Balanced rooted tree with both edge directions, total degree <= delta.
DataGraph bidirected_tree(unsigned delta, std::uint64_t L);
/// Parses "u v" pairs, one per line; vertex count is 1 + the largest id.
DataGraph graph_from_edge_list(const std::string& text);

bool is_strongly_connected(const std::vector<std::vector<Vertex>>& adjacency);

}  // namespace flashcodes
