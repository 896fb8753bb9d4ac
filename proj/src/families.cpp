#include <cmath>
#include <numeric>
#include <set>

#include "construction_support.hpp"
#include "mainswitch/constructions.hpp"
#include "mainswitch/spectral.hpp"

namespace mainswitch {

double duplicate_eigenvalue(DuplicateKind kind) { return kind == DuplicateKind::open ? 0.0 : -1.0; }

std::vector<std::vector<double>> duplicate_switch_eigvecs(std::size_t r, std::size_t t) {
  if (r < 2 || t < 1 || t > r - 1) {
    throw std::invalid_argument("duplicate class needs 1 <= t <= r-1 (got r=" + std::to_string(r) +
                                ", t=" + std::to_string(t) + ")");
  }
  std::vector<std::vector<double>> out;
  auto unit_pair = [r](std::size_t a, std::size_t b) {
    std::vector<double> v(r, 0.0);
    v[a - 1] = 1.0;
    v[b - 1] = 1.0;
    return v;
  };
  for (std::size_t i = 1; i <= t; ++i) out.push_back(unit_pair(i, t + 1));
  for (std::size_t i = 2; i <= r - t; ++i) out.push_back(unit_pair(1, t + i));
  return out;
}

std::vector<std::vector<double>> duplicate_switch_eigvecs(const Graph& g, const std::vector<Vertex>& cls,
                                                          std::size_t t, DuplicateKind kind) {
  std::set<Vertex> members(cls.begin(), cls.end());
  if (members.size() != cls.size()) throw std::invalid_argument("duplicate class repeats a vertex");
  for (Vertex v : cls) {
    if (v < 1 || v > g.order()) throw std::out_of_range("duplicate class vertex out of range");
  }
  for (std::size_t a = 1; a < cls.size(); ++a) {
    const Vertex u = cls[0];
    const Vertex v = cls[a];
    const bool linked = g.adjacent(u, v);
    if (linked != (kind == DuplicateKind::closed)) {
      throw std::invalid_argument("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                  " are not " + (kind == DuplicateKind::open ? "open" : "closed") +
                                  " duplicates");
    }
    for (Vertex w = 1; w <= g.order(); ++w) {
      if (w == u || w == v) continue;
      if (g.adjacent(u, w) != g.adjacent(v, w)) {
        throw std::invalid_argument("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                    " differ at neighbour " + std::to_string(w));
      }
    }
  }
  const auto local = duplicate_switch_eigvecs(cls.size(), t);
  std::vector<std::vector<double>> out;
  out.reserve(local.size());
  for (const auto& lv : local) {
    std::vector<double> v(g.order(), 0.0);
    for (std::size_t k = 0; k < cls.size(); ++k) v[cls[k] - 1] = lv[k];
    out.push_back(std::move(v));
  }
  return out;
}

double witness_residual(const SignedGraph& g, const Witness& w) {
  const RealMatrix a = RealMatrix::from(adjacency_matrix(g));
  const auto av = a.apply(w.vector);
  double r2 = 0.0;
  double n2 = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) {
    const double d = av[i] - w.eigenvalue * w.vector[i];
    r2 += d * d;
    n2 += w.vector[i] * w.vector[i];
  }
  return n2 > 0.0 ? std::sqrt(r2 / n2) : INFINITY;
}

bool witnesses_valid(const ConstructionResult& r) {
  const SignedGraph g = apply_switching(SignedGraph(r.graph), r.switching);
  for (const auto& w : r.witnesses) {
    if (!(witness_residual(g, w) <= kWitnessResidual)) return false;
    if (!(std::abs(normalized_sum(w.vector)) > kWitnessSum)) return false;
  }
  return true;
}

double normalized_sum(const std::vector<double>& v) {
  double n2 = 0.0;
  for (double x : v) n2 += x * x;
  if (n2 == 0.0) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / std::sqrt(n2);
}

void finalize(ConstructionResult& r) {
  const SignedGraph g = apply_switching(SignedGraph(r.graph), r.switching);
  r.profile = main_profile(adjacency_matrix(g));
  r.verified = r.profile.all_main;
}

}  // namespace mainswitch
