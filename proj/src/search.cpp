#include "mainswitch/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "mainswitch/exact.hpp"
#include "mainswitch/graph6.hpp"

namespace mainswitch {

std::vector<Switching> enumerate_switchings(std::size_t n) {
  std::vector<Switching> out;
  if (n == 0) return out;
  const std::size_t free = n - 1;  // vertices 2..n
  out.reserve(std::size_t{1} << free);
  for (std::size_t k = 0; k <= free; ++k) {
    // lexicographic k-subsets of {2..n}
    std::vector<Vertex> pick(k);
    for (std::size_t a = 0; a < k; ++a) pick[a] = a + 2;
    while (true) {
      out.emplace_back(pick);
      std::size_t a = k;
      while (a > 0 && pick[a - 1] == n - (k - a)) --a;
      if (a == 0) break;
      ++pick[a - 1];
      for (std::size_t b = a; b < k; ++b) pick[b] = pick[b - 1] + 1;
    }
  }
  return out;
}

SearchOutcome search_switchings(const Graph& g) {
  if (!g.connected()) throw DisconnectedGraph("switching search needs a connected graph");
  const SignedGraph base(g);
  SearchOutcome out;
  out.distinct_count = distinct_eigenvalue_count(char_poly(adjacency_matrix(base)));
  for (const Switching& x : enumerate_switchings(g.order())) {
    const MainProfile p = main_profile(adjacency_matrix(apply_switching(base, x)), out.distinct_count);
    if (p.all_main) {
      out.certificate = make_certificate(g, x, p, CertificateMethod::brute_force);
      return out;
    }
    out.failed.push_back({x, p.main_count});
  }
  return out;
}

std::optional<Certificate> find_all_main_switching(const Graph& g) {
  return search_switchings(g).certificate;
}

VerificationReport verify_catalog(const std::vector<Graph>& graphs, std::size_t workers) {
  const auto start = std::chrono::steady_clock::now();
  for (const Graph& g : graphs) {
    if (!g.connected()) throw DisconnectedGraph("catalog contains disconnected graph " + to_graph6(g));
  }
  std::vector<SearchOutcome> outcomes(graphs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < graphs.size(); k = next++) outcomes[k] = search_switchings(graphs[k]);
  };
  workers = std::max<std::size_t>(1, std::min(workers, graphs.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  VerificationReport report;
  report.min_n = graphs.empty() ? 0 : graphs.front().order();
  report.max_n = 0;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    report.min_n = std::min(report.min_n, graphs[k].order());
    report.max_n = std::max(report.max_n, graphs[k].order());
    ++report.graphs_checked;
    if (outcomes[k].certificate) {
      ++report.successes;
      report.certificates.push_back(*outcomes[k].certificate);
    } else {
      report.exceptions.push_back({to_graph6(graphs[k]), outcomes[k].distinct_count, outcomes[k].failed});
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_conjecture(std::size_t max_n, std::size_t workers, std::size_t cap) {
  if (max_n < 2 || max_n > cap) {
    throw std::invalid_argument("verify_conjecture needs 2 <= max_n <= " + std::to_string(cap));
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<Graph> catalog;
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto level = enumerate_connected_graphs(n, cap);
    catalog.insert(catalog.end(), level.begin(), level.end());
  }
  VerificationReport report = verify_catalog(catalog, workers);
  report.min_n = 2;
  report.max_n = max_n;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["n_range"] = {r.min_n, r.max_n};
  j["graphs_checked"] = r.graphs_checked;
  j["successes"] = r.successes;
  auto exceptions = nlohmann::ordered_json::array();
  for (const auto& e : r.exceptions) {
    nlohmann::ordered_json ej;
    ej["graph"] = e.graph;
    ej["distinct_count"] = e.distinct_count;
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : e.classes) {
      nlohmann::ordered_json cj;
      cj["switching"] = c.switching.vertices();
      cj["main_count"] = c.main_count;
      classes.push_back(std::move(cj));
    }
    ej["classes"] = std::move(classes);
    exceptions.push_back(std::move(ej));
  }
  j["exceptions"] = std::move(exceptions);
  j["tool_version"] = tool_version();
  if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

std::vector<std::string> known_exceptions() {
  const Graph k2(2, {{1, 2}});
  const Graph k4_minus_e(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  return {to_graph6(canonical_form(k2)), to_graph6(canonical_form(k4_minus_e))};
}

}  // namespace mainswitch
