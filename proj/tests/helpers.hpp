#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "mainswitch/graph.hpp"

namespace testing {

using namespace mainswitch;

inline Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

inline Graph random_connected_graph(std::mt19937& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  // random spanning tree first
  for (Vertex v = 2; v <= n; ++v) {
    std::uniform_int_distribution<Vertex> parent(1, v - 1);
    edges.push_back({parent(rng), v});
  }
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      const bool present = std::find(edges.begin(), edges.end(), Edge{u, v}) != edges.end() ||
                           std::find(edges.begin(), edges.end(), Edge{v, u}) != edges.end();
      if (!present && coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

inline SignedGraph random_signing(std::mt19937& rng, const Graph& g) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Sign> signs;
  for (std::size_t k = 0; k < g.size(); ++k) signs.push_back(coin(rng) ? Sign::negative : Sign::positive);
  return SignedGraph(g, signs);
}

inline Switching random_switching(std::mt19937& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Vertex> vs;
  for (Vertex v = 1; v <= n; ++v) {
    if (coin(rng)) vs.push_back(v);
  }
  return Switching(vs);
}

}  // namespace testing
