#pragma once

// Floating-point spectra. The main/non-main flags produced here are
// advisory; exact.hpp decides whenever the matrix has integer entries.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mainswitch/exact.hpp"
#include "mainswitch/graph.hpp"

namespace mainswitch {

class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  static RealMatrix from(const IntMatrix& m);
  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<double> column(std::size_t j) const;
  std::vector<double> apply(std::span<const double> x) const;
  double frobenius_norm() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct EigenSystem {
  /// Ascending.
  std::vector<double> values;
  /// Column k is the unit eigenvector for values[k].
  RealMatrix vectors;
  /// Largest observed ||A v - lambda v||_2.
  double residual_bound = 0.0;
};

/// Cyclic Jacobi rotations until every off-diagonal magnitude drops below
/// tol * ||A||_F. Throws std::invalid_argument if A is not symmetric to
/// within 1e-12.
EigenSystem eigen_sym(const RealMatrix& a, double tol = 1e-12);

struct EigenGroup {
  double value = 0.0;
  std::size_t multiplicity = 0;
  bool is_main = false;
  /// Norm of the projection of the all-ones vector onto the eigenspace.
  double main_mass = 0.0;
};

struct SpectrumReport {
  std::size_t n = 0;
  std::vector<EigenGroup> groups;

  std::size_t main_count() const;
  std::size_t distinct_count() const { return groups.size(); }
};

/// Groups eigenvalues closer than group_eps (chained) and flags a group
/// main when its projection of j exceeds main_eps. Defaults:
/// group_eps = 1e-8 * max(1, spectral radius), main_eps = 1e-8 * sqrt(n).
SpectrumReport classify_main(const EigenSystem& es, std::optional<double> group_eps = std::nullopt,
                             std::optional<double> main_eps = std::nullopt);

/// Shorthand for classify_main(eigen_sym(A)).
SpectrumReport spectrum_report(const SignedGraph& g);

/// x^3 - (n-r-2) x^2 - (n-1) x + r (n-r-2), the cubic whose roots are the
/// eigenvalues of S_{n,r} other than 0 and -1.
double snr_cubic(std::size_t n, std::size_t r, double x);

/// Roots l1 < 0 < l2 < sqrt(r) < l3 of snr_cubic. Requires r >= 1 and
/// n >= r + 3.
std::array<double, 3> snr_cubic_roots(std::size_t n, std::size_t r);

struct SnrSpectrum {
  std::size_t zero_mult = 0;
  std::size_t minus_one_mult = 0;
  std::array<double, 3> cubic_roots{};

  /// Full multiset, ascending.
  std::vector<double> eigenvalues() const;
};

SnrSpectrum snr_spectrum(std::size_t n, std::size_t r);

/// sum_i m_i / (x + t_i) - 1.
double secular_function(const MultipartiteParams& p, double x);

/// Roots of the secular equation, descending: one positive root followed
/// by one root in each pole interval (-t_{k}, -t_{k+1}), moving left.
/// A single-part (edgeless) layout has the lone root 0.
std::vector<double> multipartite_secular_roots(const MultipartiteParams& p);

/// Block coordinates z_i = 1 / (x + t_i) of the eigenvector of a secular
/// root x; the eigenvector is constant on each block.
std::vector<double> secular_coordinates(const MultipartiteParams& p, double x);

struct MultipartiteSpectrum {
  std::size_t zero_mult = 0;
  /// (-t_i, l_i - 1) for each block with l_i >= 2.
  std::vector<std::pair<double, std::size_t>> ti_mults;
  std::vector<double> secular_roots;

  std::vector<double> eigenvalues() const;
};

MultipartiteSpectrum multipartite_spectrum(const MultipartiteParams& p);

}  // namespace mainswitch
