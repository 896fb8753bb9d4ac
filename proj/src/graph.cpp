#include "mainswitch/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mainswitch {

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adj_(n * n, 0) {
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > n_) {
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "} outside 1.." +
                                  std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) + "," +
                                std::to_string(dup->v) + "}");
  }
  for (const auto& e : edges_) {
    adj_[(e.u - 1) * n_ + (e.v - 1)] = 1;
    adj_[(e.v - 1) * n_ + (e.u - 1)] = 1;
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return false;
  return adj_[(u - 1) * n_ + (v - 1)] != 0;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (Vertex w = 1; w <= n_; ++w) d += adjacent(v, w) ? 1 : 0;
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex w = 1; w <= n_; ++w) {
    if (adjacent(v, w)) out.push_back(w);
  }
  return out;
}

bool Graph::connected() const {
  if (n_ == 0) return false;
  std::vector<char> seen(n_ + 1, 0);
  std::vector<Vertex> stack{1};
  seen[1] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w = 1; w <= n_; ++w) {
      if (!seen[w] && adjacent(v, w)) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

bool Graph::regular() const {
  if (n_ == 0) return true;
  const std::size_t d = degree(1);
  for (Vertex v = 2; v <= n_; ++v) {
    if (degree(v) != d) return false;
  }
  return true;
}

std::size_t Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

SignedGraph::SignedGraph(Graph g)
    : graph_(std::move(g)), signs_(graph_.size(), Sign::positive) {}

SignedGraph::SignedGraph(Graph g, std::vector<Sign> signs)
    : graph_(std::move(g)), signs_(std::move(signs)) {
  if (signs_.size() != graph_.size()) {
    throw std::invalid_argument("sign vector length " + std::to_string(signs_.size()) +
                                " does not match edge count " +
                                std::to_string(graph_.size()));
  }
}

int SignedGraph::sign(Vertex u, Vertex v) const {
  const std::size_t k = graph_.edge_index(u, v);
  if (k == graph_.size()) return 0;
  return static_cast<int>(signs_[k]);
}

std::size_t SignedGraph::negative_edges() const {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), Sign::negative));
}

Switching::Switching(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (!vertices_.empty() && vertices_.front() == 0) {
    throw std::invalid_argument("switching vertices are 1-based");
  }
  auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) {
    throw std::invalid_argument("vertex " + std::to_string(*dup) +
                                " switched more than once");
  }
}

bool Switching::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Switching Switching::complement(std::size_t n) const {
  std::vector<Vertex> rest;
  for (Vertex v = 1; v <= n; ++v) {
    if (!contains(v)) rest.push_back(v);
  }
  return Switching(std::move(rest));
}

std::string to_string(const Switching& x) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) os << ',';
    os << x.vertices()[k];
  }
  os << '}';
  return os.str();
}

SignedGraph apply_switching(const SignedGraph& g, const Switching& x) {
  if (!x.empty() && x.vertices().back() > g.order()) {
    throw std::out_of_range("switched vertex " + std::to_string(x.vertices().back()) +
                            " outside 1.." + std::to_string(g.order()));
  }
  std::vector<Sign> signs = g.signs();
  const auto& edges = g.graph().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (x.contains(edges[k].u) != x.contains(edges[k].v)) {
      signs[k] = signs[k] == Sign::positive ? Sign::negative : Sign::positive;
    }
  }
  return SignedGraph(g.graph(), std::move(signs));
}

IntMatrix adjacency_matrix(const SignedGraph& g) {
  const std::size_t n = g.order();
  IntMatrix a(n, n);
  const auto& edges = g.graph().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const int s = static_cast<int>(g.signs()[k]);
    a(edges[k].u - 1, edges[k].v - 1) = s;
    a(edges[k].v - 1, edges[k].u - 1) = s;
  }
  return a;
}

Graph make_snr(const SnrParams& p) {
  if (p.n < p.r + 1) {
    throw std::invalid_argument("S_{n,r} needs n >= r + 1 (got n=" + std::to_string(p.n) +
                                ", r=" + std::to_string(p.r) + ")");
  }
  const Vertex center = p.r + 1;
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= p.r; ++v) edges.push_back({v, center});
  for (Vertex u = center; u <= p.n; ++u) {
    for (Vertex v = u + 1; v <= p.n; ++v) edges.push_back({u, v});
  }
  return Graph(p.n, std::move(edges));
}

MultipartiteParams::MultipartiteParams(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("multipartite graph needs a block");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].count == 0) {
      throw std::invalid_argument("block " + std::to_string(i + 1) + " has zero parts");
    }
    if (blocks_[i].size == 0) {
      throw std::invalid_argument("block " + std::to_string(i + 1) + " has empty parts");
    }
    if (i > 0 && blocks_[i].size >= blocks_[i - 1].size) {
      throw std::invalid_argument("part sizes must be strictly decreasing (t" +
                                  std::to_string(i) + "=" +
                                  std::to_string(blocks_[i - 1].size) + ", t" +
                                  std::to_string(i + 1) + "=" +
                                  std::to_string(blocks_[i].size) + ")");
    }
  }
  offsets_.reserve(blocks_.size());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    offsets_.push_back(order_);
    order_ += block_order(i);
  }
}

MultipartiteParams MultipartiteParams::parse(std::string_view text) {
  std::vector<Block> blocks;
  std::size_t pos = 0;
  auto read_number = [&](std::size_t& out) {
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr == first) {
      throw std::invalid_argument("bad blocks syntax at offset " + std::to_string(pos) +
                                  " in '" + std::string(text) + "' (expected l1xT1,l2xT2,...)");
    }
    pos += static_cast<std::size_t>(ptr - first);
  };
  while (true) {
    Block b;
    read_number(b.count);
    if (pos >= text.size() || (text[pos] != 'x' && text[pos] != '*')) {
      throw std::invalid_argument("bad blocks syntax at offset " + std::to_string(pos) +
                                  " in '" + std::string(text) + "' (expected 'x')");
    }
    ++pos;
    read_number(b.size);
    blocks.push_back(b);
    if (pos == text.size()) break;
    if (text[pos] != ',') {
      throw std::invalid_argument("bad blocks syntax at offset " + std::to_string(pos) +
                                  " in '" + std::string(text) + "' (expected ',')");
    }
    ++pos;
  }
  return MultipartiteParams(std::move(blocks));
}

std::size_t MultipartiteParams::total_parts() const {
  std::size_t parts = 0;
  for (const auto& b : blocks_) parts += b.count;
  return parts;
}

std::size_t MultipartiteParams::zero_multiplicity() const {
  return order_ - total_parts();
}

std::vector<Vertex> MultipartiteParams::part(std::size_t i, std::size_t j) const {
  std::vector<Vertex> out(blocks_[i].size);
  std::iota(out.begin(), out.end(), offsets_[i] + j * blocks_[i].size + 1);
  return out;
}

std::vector<Vertex> MultipartiteParams::block_vertices(std::size_t i) const {
  std::vector<Vertex> out(block_order(i));
  std::iota(out.begin(), out.end(), offsets_[i] + 1);
  return out;
}

std::size_t MultipartiteParams::block_of(Vertex v) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (v > offsets_[i] && v <= offsets_[i] + block_order(i)) return i;
  }
  throw std::out_of_range("vertex " + std::to_string(v) + " outside the block layout");
}

std::string MultipartiteParams::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(blocks_[i].count) + "x" + std::to_string(blocks_[i].size);
  }
  return out;
}

Graph make_multipartite(const MultipartiteParams& p) {
  // part id of each vertex, in layout order
  std::vector<std::size_t> part_of(p.order() + 1, 0);
  std::size_t part_id = 0;
  for (std::size_t i = 0; i < p.num_blocks(); ++i) {
    for (std::size_t j = 0; j < p.count(i); ++j, ++part_id) {
      for (Vertex v : p.part(i, j)) part_of[v] = part_id;
    }
  }
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= p.order(); ++u) {
    for (Vertex v = u + 1; v <= p.order(); ++v) {
      if (part_of[u] != part_of[v]) edges.push_back({u, v});
    }
  }
  return Graph(p.order(), std::move(edges));
}

}  // namespace mainswitch
