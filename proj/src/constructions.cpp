#include "mainswitch/constructions.hpp"

#include <cmath>
#include <optional>

#include "construction_support.hpp"
#include "mainswitch/spectral.hpp"

namespace mainswitch {

std::vector<double> snr_eigvec(std::size_t n, std::size_t r, double lambda) {
  if (r < 1 || n < r + 3) throw std::invalid_argument("S_{n,r} eigenvector needs r >= 1 and n >= r + 3");
  if (std::abs(lambda) < 1e-12 || std::abs(lambda + 1.0) < 1e-12) {
    throw std::invalid_argument("S_{n,r} eigenvector formula excludes eigenvalues 0 and -1");
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < r; ++i) x[i] = 1.0;
  x[r] = lambda;
  const double clique = lambda - static_cast<double>(r) / (lambda + 1.0);
  for (std::size_t i = r + 1; i < n; ++i) x[i] = clique;

  const Witness w{lambda, x};
  if (!(witness_residual(SignedGraph(make_snr({n, r})), w) <= kWitnessResidual)) {
    throw std::invalid_argument("lambda = " + std::to_string(lambda) + " is not a root of the S_{" +
                                std::to_string(n) + "," + std::to_string(r) + "} cubic");
  }
  return x;
}

ConstructionResult snr_all_main_switching(std::size_t n, std::size_t r) {
  if (r < 1 || n < r + 3) {
    throw std::invalid_argument("S_{n,r} construction needs r >= 1 and n >= r + 3 (got n=" +
                                std::to_string(n) + ", r=" + std::to_string(r) + ")");
  }
  const std::array<double, 3> roots = snr_cubic_roots(n, r);
  const std::vector<Vertex> base{1, n};

  std::vector<std::vector<double>> betas;
  for (double lambda : roots) betas.push_back(flip(snr_eigvec(n, r, lambda), base));

  // Extra flip applied on top of {v1, vn}; none first.
  std::vector<std::optional<Vertex>> candidates{std::nullopt};
  if (r >= 3 && n >= r + 4) candidates.insert(candidates.end(), {Vertex{2}, Vertex{r + 1}, Vertex{n - 1}});

  std::optional<std::size_t> chosen;
  std::vector<std::vector<double>> chosen_vectors;
  for (std::size_t c = 0; c < candidates.size() && !chosen; ++c) {
    std::vector<Vertex> flips;
    if (candidates[c]) flips.push_back(*candidates[c]);
    std::vector<std::vector<double>> vectors;
    bool all_main = true;
    for (const auto& beta : betas) {
      vectors.push_back(flip(beta, flips));
      if (!(std::abs(normalized_sum(vectors.back())) > kWitnessSum)) all_main = false;
    }
    if (all_main || candidates.size() == 1) {
      chosen = c;
      chosen_vectors = std::move(vectors);
    }
  }
  if (!chosen) {
    throw ConstructionError("no candidate keeps every cubic eigenvector of S_{" + std::to_string(n) + "," +
                            std::to_string(r) + "} main");
  }

  ConstructionResult out;
  out.graph = make_snr({n, r});
  std::vector<Vertex> switched = base;
  out.route = "base";
  if (candidates[*chosen]) {
    const Vertex extra = *candidates[*chosen];
    switched.push_back(extra);
    out.route = extra == r + 1 ? "base+center" : "base+v" + std::to_string(extra);
  }
  out.switching = Switching(switched);

  for (std::size_t k = 0; k < roots.size(); ++k) out.witnesses.push_back({roots[k], chosen_vectors[k]});

  // Pendants: switched ones first (v1, possibly v2).
  if (r >= 2) {
    std::vector<Vertex> cls;
    for (Vertex v = 1; v <= r; ++v) {
      if (out.switching.contains(v)) cls.push_back(v);
    }
    const std::size_t p = cls.size();
    for (Vertex v = 1; v <= r; ++v) {
      if (!out.switching.contains(v)) cls.push_back(v);
    }
    out.witnesses.push_back({0.0, duplicate_switch_eigvecs(out.graph, cls, p, DuplicateKind::open).front()});
  }
  // Clique rest, from vn downwards: switched ones (vn, possibly v_{n-1}) first.
  {
    std::vector<Vertex> cls;
    for (Vertex v = n; v >= r + 2; --v) {
      if (out.switching.contains(v)) cls.push_back(v);
    }
    const std::size_t q = cls.size();
    for (Vertex v = n; v >= r + 2; --v) {
      if (!out.switching.contains(v)) cls.push_back(v);
    }
    out.witnesses.push_back({-1.0, duplicate_switch_eigvecs(out.graph, cls, q, DuplicateKind::closed).front()});
  }

  finalize(out);
  return out;
}

}  // namespace mainswitch
