#pragma once

// Isomorphism-free catalog of small connected graphs. Canonical forms are
// the labeling that minimizes the graph6 upper-triangle bit string over all
// n! vertex permutations.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mainswitch/graph.hpp"

namespace mainswitch {

inline constexpr std::size_t kCatalogMaxOrder = 7;
/// Orders above this do not fit the 64-bit canonical code.
inline constexpr std::size_t kCanonicalMaxOrder = 11;

/// Upper-triangle bit string in graph6 order, first bit most significant.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(std::size_t n, std::uint64_t code);

Graph canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// One canonical representative per isomorphism class of connected graphs
/// on n vertices, ordered by canonical code. Throws std::invalid_argument
/// when n is 0 or above max_order.
std::vector<Graph> enumerate_connected_graphs(std::size_t n, std::size_t max_order = kCatalogMaxOrder);

/// All graphs (connected or not) on n vertices up to isomorphism.
std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t max_order = kCatalogMaxOrder);

}  // namespace mainswitch
