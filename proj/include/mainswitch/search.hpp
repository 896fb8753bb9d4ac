#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mainswitch/catalog.hpp"
#include "mainswitch/certificate.hpp"
#include "mainswitch/graph.hpp"

namespace mainswitch {

class DisconnectedGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One switching per switching class of an all-positive graph: every
/// subset of {2..n}, ordered by size and then lexicographically.
std::vector<Switching> enumerate_switchings(std::size_t n);

struct ClassOutcome {
  Switching switching;
  std::size_t main_count = 0;
};

struct SearchOutcome {
  std::size_t distinct_count = 0;
  std::optional<Certificate> certificate;
  /// Main counts of every class tried before the first success (all of
  /// them when there is none).
  std::vector<ClassOutcome> failed;
};

/// Scans enumerate_switchings(n) for the first exactly all-main signing.
/// Throws DisconnectedGraph for disconnected input.
SearchOutcome search_switchings(const Graph& g);

std::optional<Certificate> find_all_main_switching(const Graph& g);

struct ExceptionRecord {
  std::string graph;
  std::size_t distinct_count = 0;
  std::vector<ClassOutcome> classes;
};

struct VerificationReport {
  std::size_t min_n = 0;
  std::size_t max_n = 0;
  std::size_t graphs_checked = 0;
  std::size_t successes = 0;
  std::vector<ExceptionRecord> exceptions;
  /// One per successful graph, in catalog order.
  std::vector<Certificate> certificates;
  double elapsed_seconds = 0.0;
};

/// Runs the search over every graph; results are merged in input order, so
/// the report does not depend on the worker count.
VerificationReport verify_catalog(const std::vector<Graph>& graphs, std::size_t workers = 1);

/// Catalog of connected graphs on 2..max_n vertices.
VerificationReport verify_conjecture(std::size_t max_n, std::size_t workers = 1,
                                     std::size_t cap = kCatalogMaxOrder);

/// Summary JSON. Timing is left out unless asked for so that repeated runs
/// serialize identically.
nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing = false);

/// graph6 strings of the two graphs with no all-main switching, in
/// canonical labeling.
std::vector<std::string> known_exceptions();

}  // namespace mainswitch
