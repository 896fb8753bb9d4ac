#pragma once

// Explicit all-main switchings for S_{n,r} and complete multipartite
// graphs, each returned with one main eigenvector per distinct eigenvalue
// and an exact all-main verdict.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mainswitch/exact.hpp"
#include "mainswitch/families.hpp"
#include "mainswitch/graph.hpp"

namespace mainswitch {

/// Raised for K2 and K4 minus an edge, the graphs with no all-main signing.
class NoAllMainSwitching : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction reached a state its correctness argument rules out.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class DuplicateKind {
  /// Same open neighbourhood; eigenvalue 0.
  open,
  /// Same closed neighbourhood; eigenvalue -1.
  closed,
};

double duplicate_eigenvalue(DuplicateKind kind);

/// Local form: a class of r duplicates whose first t are switched. Returns
/// the r-1 vectors e_i + e_{t+1} (1 <= i <= t) and e_1 + e_{t+i}
/// (2 <= i <= r-t), each of length r.
std::vector<std::vector<double>> duplicate_switch_eigvecs(std::size_t r, std::size_t t);

/// Global form: cls lists the duplicate class with the t switched vertices
/// first. Checks that cls really is an open/closed duplicate class of g.
std::vector<std::vector<double>> duplicate_switch_eigvecs(const Graph& g,
                                                          const std::vector<Vertex>& cls,
                                                          std::size_t t, DuplicateKind kind);

struct Witness {
  double eigenvalue = 0.0;
  std::vector<double> vector;
};

struct ConstructionResult {
  Graph graph;
  Switching switching;
  std::vector<Witness> witnesses;
  MainProfile profile;
  /// Set from the exact main profile of the switched graph.
  bool verified = false;
  /// Which branch of the construction produced the switching.
  std::string route;
  /// True when the switching came from the exhaustive search.
  bool delegated = false;
};

/// ||A v - lambda v|| / ||v|| for the signed graph g^x.
double witness_residual(const SignedGraph& g, const Witness& w);

/// Every witness is a unit-residual eigenvector (<= 1e-8) with entry-sum
/// magnitude above 1e-8.
bool witnesses_valid(const ConstructionResult& r);

// ---- S_{n,r} ----

/// Eigenvector [1 (r times), lambda, lambda - r/(lambda+1) (n-r-1 times)]
/// of A(S_{n,r}) for a root lambda of the cubic. Throws
/// std::invalid_argument for lambda in {0,-1} or when the residual check
/// fails.
std::vector<double> snr_eigvec(std::size_t n, std::size_t r, double lambda);

/// Switch v1 and vn; when r >= 3 and n >= r + 4 additionally switch the
/// first of v2, v_{r+1}, v_{n-1} (or none) that keeps all three cubic
/// eigenvectors main.
ConstructionResult snr_all_main_switching(std::size_t n, std::size_t r);

// ---- complete multipartite ----

/// Eigenvector of -t_i for the graph switched in the first p vertices of
/// U_{i,1} and the first q of U_{i,2}; its entry-sum is 2(q - p). Needs
/// l_i >= 2, 1 <= p <= t_i and q < p. Block index i is 0-based.
std::vector<double> multipartite_ti_eigvec(const MultipartiteParams& p, std::size_t i,
                                           std::size_t p_switched, std::size_t q_switched);

/// P (1_{U_{i,a}} - 1_{U_{i,b}}) for the given switching; an eigenvector of
/// -t_i whose entry-sum is twice the difference of switched counts.
std::vector<double> block_difference_eigvec(const MultipartiteParams& p, const Switching& x,
                                            std::size_t i, std::size_t a, std::size_t b);

/// Eigenvector P z of a secular root, z constant on each block.
std::vector<double> secular_eigvec(const MultipartiteParams& p, const Switching& x, double lambda);

/// Vertices that switching `extra` more vertices of block i would add on
/// top of `current`: smallest labels first, except that a third vertex in a
/// block of parts of size 3 with at least two parts goes to the second
/// part (f+1, f+2, f+4).
std::vector<Vertex> next_switched_in_block(const MultipartiteParams& p, const Switching& current,
                                           std::size_t i, std::size_t extra);

/// All-main switching for K_{l1*t1,...,ls*ts} by case analysis on t_s,
/// s and the l_i. Small cases that the case analysis leaves open (n <= 7)
/// are handed to the exhaustive search. Throws NoAllMainSwitching for K2
/// and K4 minus an edge.
ConstructionResult multipartite_all_main_switching(const MultipartiteParams& p);

/// One vertex per part, for l_i = 1, t1 > ... > ts >= 2, s >= 2.
ConstructionResult proposition_one_per_part(const MultipartiteParams& p);

/// The secular-root eigenvector of the one-per-part switching.
std::vector<double> one_per_part_vector(const MultipartiteParams& p, double lambda);

bool is_k2(const MultipartiteParams& p);
bool is_k4_minus_edge(const MultipartiteParams& p);

}  // namespace mainswitch
