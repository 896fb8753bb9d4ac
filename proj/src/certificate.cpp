#include "mainswitch/certificate.hpp"

#include <array>
#include <cstdio>

#include <openssl/sha.h>

#include "mainswitch/graph6.hpp"

namespace mainswitch {

std::string_view tool_version() { return "mainswitch 1.0.0"; }

std::string_view to_string(CertificateMethod m) {
  return m == CertificateMethod::constructive ? "constructive" : "brute_force";
}

namespace {

nlohmann::ordered_json body_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["graph"] = c.graph;
  j["switching"] = c.switching;
  j["distinct_count"] = c.distinct_count;
  j["main_count"] = c.main_count;
  j["all_main"] = c.all_main;
  j["method"] = to_string(c.method);
  j["tool_version"] = c.tool_version;
  return j;
}

template <typename T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("certificate lacks '") + key + "'", 0);
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate field '") + key + "': " + e.what(), 0);
  }
}

}  // namespace

std::string certificate_digest(const Certificate& c) {
  const std::string body = body_json(c).dump();
  std::array<unsigned char, SHA256_DIGEST_LENGTH> md{};
  SHA256(reinterpret_cast<const unsigned char*>(body.data()), body.size(), md.data());
  std::string hex;
  hex.reserve(2 * md.size());
  for (unsigned char b : md) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", b);
    hex += buf;
  }
  return hex;
}

Certificate make_certificate(const Graph& g, const Switching& x, const MainProfile& profile,
                             CertificateMethod method) {
  Certificate c;
  c.graph = to_graph6(g);
  c.switching = x.vertices();
  c.distinct_count = profile.distinct_count;
  c.main_count = profile.main_count;
  c.all_main = profile.all_main;
  c.method = method;
  c.tool_version = std::string(tool_version());
  c.digest = certificate_digest(c);
  return c;
}

Certificate make_certificate(const ConstructionResult& r) {
  return make_certificate(r.graph, r.switching, r.profile,
                          r.delegated ? CertificateMethod::brute_force : CertificateMethod::constructive);
}

nlohmann::ordered_json to_json(const Certificate& c) {
  nlohmann::ordered_json j = body_json(c);
  j["digest"] = c.digest;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.graph = field<std::string>(j, "graph");
  c.switching = field<std::vector<Vertex>>(j, "switching");
  c.distinct_count = field<std::size_t>(j, "distinct_count");
  c.main_count = field<std::size_t>(j, "main_count");
  c.all_main = field<bool>(j, "all_main");
  const auto method = field<std::string>(j, "method");
  if (method == "constructive") {
    c.method = CertificateMethod::constructive;
  } else if (method == "brute_force") {
    c.method = CertificateMethod::brute_force;
  } else {
    throw ParseError("unknown certificate method '" + method + "'", 0);
  }
  c.tool_version = field<std::string>(j, "tool_version");
  c.digest = field<std::string>(j, "digest");
  return c;
}

std::string to_json_line(const Certificate& c) { return to_json(c).dump(); }

std::vector<Certificate> parse_certificates(std::string_view text) {
  std::vector<Certificate> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what(), pos);
      }
      out.push_back(certificate_from_json(j));
    }
    pos = end + 1;
  }
  return out;
}

bool verify_certificate(const Certificate& c) {
  const Graph g = parse_graph6(c.graph);
  if (c.digest != certificate_digest(c)) return false;
  Switching x;
  try {
    x = Switching(c.switching);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (!x.empty() && x.vertices().back() > g.order()) return false;
  const MainProfile p = main_profile(adjacency_matrix(apply_switching(SignedGraph(g), x)));
  return p.distinct_count == c.distinct_count && p.main_count == c.main_count &&
         p.all_main == c.all_main;
}

}  // namespace mainswitch
