#pragma once

// Serializable evidence that a switching of a graph is all-main.
//
// Certificates are JSON objects with keys in this order:
//   graph, switching, distinct_count, main_count, all_main, method,
//   tool_version, digest
// where digest is the SHA-256 (hex) of the compact JSON of the first seven
// keys. Files hold one certificate per line.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mainswitch/constructions.hpp"
#include "mainswitch/exact.hpp"
#include "mainswitch/graph.hpp"

namespace mainswitch {

std::string_view tool_version();

enum class CertificateMethod { constructive, brute_force };

std::string_view to_string(CertificateMethod m);

struct Certificate {
  /// graph6 of the graph in the labeling the switching refers to.
  std::string graph;
  std::vector<Vertex> switching;
  std::size_t distinct_count = 0;
  std::size_t main_count = 0;
  bool all_main = false;
  CertificateMethod method = CertificateMethod::brute_force;
  std::string tool_version;
  std::string digest;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Fills in tool_version and digest.
Certificate make_certificate(const Graph& g, const Switching& x, const MainProfile& profile,
                             CertificateMethod method);
Certificate make_certificate(const ConstructionResult& r);

/// SHA-256 of the certificate body (everything except the digest).
std::string certificate_digest(const Certificate& c);

nlohmann::ordered_json to_json(const Certificate& c);
/// Throws ParseError when a key is missing or has the wrong type.
Certificate certificate_from_json(const nlohmann::json& j);

std::string to_json_line(const Certificate& c);
/// Newline-delimited certificates; blank lines are skipped.
std::vector<Certificate> parse_certificates(std::string_view text);

/// Re-derives the exact main profile of (graph, switching) and compares it
/// with the recorded counts; also checks the digest. Throws ParseError if
/// the graph payload is not valid graph6.
bool verify_certificate(const Certificate& c);

}  // namespace mainswitch
