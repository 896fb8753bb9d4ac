#include "mainswitch/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace mainswitch {

namespace {

std::size_t code_bits(std::size_t n) { return n * (n - 1) / 2; }

// Dense 0/1 adjacency, 0-based.
std::vector<std::uint8_t> dense(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint8_t> adj(n * n, 0);
  for (const auto& e : g.edges()) {
    adj[(e.u - 1) * n + (e.v - 1)] = 1;
    adj[(e.v - 1) * n + (e.u - 1)] = 1;
  }
  return adj;
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCanonicalMaxOrder) throw std::invalid_argument("adjacency code limited to small graphs");
  std::uint64_t code = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1u : 0u);
  }
  return code;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  const std::size_t bits = code_bits(n);
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i, ++k) {
      if ((code >> (bits - 1 - k)) & 1u) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

Graph canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCanonicalMaxOrder) throw std::invalid_argument("canonical form limited to small graphs");
  if (n <= 1) return g;
  const auto adj = dense(g);
  const std::size_t bits = code_bits(n);

  // perm[new] = old. Compare bit by bit against the best code so far and
  // abandon a permutation at its first larger bit.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  bool have_best = false;
  do {
    std::uint64_t code = 0;
    std::size_t k = 0;
    bool smaller = !have_best;
    bool worse = false;
    for (std::size_t j = 1; j < n && !worse; ++j) {
      const std::size_t pj = perm[j] * n;
      for (std::size_t i = 0; i < j; ++i, ++k) {
        const std::uint64_t bit = adj[pj + perm[i]];
        code = (code << 1) | bit;
        if (!smaller) {
          const std::uint64_t best_bit = (best >> (bits - 1 - k)) & 1u;
          if (bit > best_bit) {
            worse = true;
            break;
          }
          if (bit < best_bit) smaller = true;
        }
      }
    }
    if (!worse && smaller) {
      best = code;
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return graph_from_code(n, best);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t max_order) {
  if (n == 0 || n > max_order || n > kCanonicalMaxOrder) {
    throw std::invalid_argument("graph enumeration supports orders 1.." +
                                std::to_string(std::min(max_order, kCanonicalMaxOrder)) + " (got " +
                                std::to_string(n) + ")");
  }
  // Every graph on k vertices is a smaller one plus a vertex joined to
  // some subset, so growing one vertex at a time reaches all classes.
  std::set<std::uint64_t> level{0};
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph base = graph_from_code(k - 1, code);
      for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << (k - 1)); ++subset) {
        std::vector<Edge> edges = base.edges();
        for (Vertex v = 1; v < k; ++v) {
          if ((subset >> (v - 1)) & 1u) edges.push_back({v, k});
        }
        next.insert(adjacency_code(canonical_form(Graph(k, std::move(edges)))));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
  return out;
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n, std::size_t max_order) {
  std::vector<Graph> all = enumerate_graphs(n, max_order);
  std::erase_if(all, [](const Graph& g) { return !g.connected(); });
  return all;
}

}  // namespace mainswitch
