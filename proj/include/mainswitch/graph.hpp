#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mainswitch/exact.hpp"

namespace mainswitch {

/// Vertices are labeled 1..n throughout the library.
using Vertex = std::size_t;

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// endpoints outside 1..n. Edge endpoints may be given in either order.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  /// Sorted lexicographically, each with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  bool connected() const;
  bool regular() const;

  /// Index of {u,v} in edges(), or size() when absent.
  std::size_t edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adj_;
};

enum class Sign : std::int8_t { positive = 1, negative = -1 };

class SignedGraph {
 public:
  SignedGraph() = default;
  /// All-positive signing.
  SignedGraph(Graph g);  // NOLINT(google-explicit-constructor)
  /// signs[k] is the sign of g.edges()[k].
  SignedGraph(Graph g, std::vector<Sign> signs);

  const Graph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }
  const std::vector<Sign>& signs() const { return signs_; }

  /// +1 / -1 for an edge, 0 for a non-adjacent pair.
  int sign(Vertex u, Vertex v) const;
  std::size_t negative_edges() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  Graph graph_;
  std::vector<Sign> signs_;
};

/// A switching set X; applying X flips every edge of the cut (X, V\X).
class Switching {
 public:
  Switching() = default;
  /// Throws std::invalid_argument on repeated or zero vertices.
  explicit Switching(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  bool contains(Vertex v) const;
  Switching complement(std::size_t n) const;

  friend bool operator==(const Switching&, const Switching&) = default;

 private:
  std::vector<Vertex> vertices_;
};

std::string to_string(const Switching& x);

SignedGraph apply_switching(const SignedGraph& g, const Switching& x);

/// Signed adjacency matrix, 0-based.
IntMatrix adjacency_matrix(const SignedGraph& g);

/// S_{n,r}: pendants v1..vr, center v_{r+1}, clique rest v_{r+2}..vn.
struct SnrParams {
  std::size_t n = 0;
  std::size_t r = 0;
};

Graph make_snr(const SnrParams& p);

/// l parts, each of t vertices.
struct Block {
  std::size_t count = 0;
  std::size_t size = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Block layout of K_{l1*t1,...,ls*ts} with t1 > ... > ts >= 1. Blocks are
/// indexed from 0; vertices run U_{1,1}, U_{1,2}, ..., U_{s,ls}
/// consecutively, starting at 1.
class MultipartiteParams {
 public:
  /// Throws std::invalid_argument unless sizes are strictly decreasing and
  /// every count and size is positive.
  explicit MultipartiteParams(std::vector<Block> blocks);

  /// Parses "2x3,1x1" (count x size, comma separated).
  static MultipartiteParams parse(std::string_view text);

  std::size_t num_blocks() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_[i]; }
  std::size_t count(std::size_t i) const { return blocks_[i].count; }
  std::size_t part_size(std::size_t i) const { return blocks_[i].size; }
  /// m_i = l_i * t_i.
  std::size_t block_order(std::size_t i) const { return blocks_[i].count * blocks_[i].size; }
  /// f_i: number of vertices in blocks before i.
  std::size_t offset(std::size_t i) const { return offsets_[i]; }
  std::size_t order() const { return order_; }
  std::size_t total_parts() const;
  /// Multiplicity of eigenvalue 0: sum of (m_i - l_i).
  std::size_t zero_multiplicity() const;

  /// Vertices of part j (0-based) in block i.
  std::vector<Vertex> part(std::size_t i, std::size_t j) const;
  /// All vertices of block i.
  std::vector<Vertex> block_vertices(std::size_t i) const;
  std::size_t block_of(Vertex v) const;

  std::string to_string() const;

  friend bool operator==(const MultipartiteParams& a, const MultipartiteParams& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> offsets_;
  std::size_t order_ = 0;
};

Graph make_multipartite(const MultipartiteParams& p);

}  // namespace mainswitch
