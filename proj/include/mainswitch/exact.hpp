#pragma once

// Exact integer linear algebra: characteristic polynomials, squarefree
// degree, walk matrices and fraction-free rank. Everything here is
// arbitrary precision, so the all-main decision never depends on a
// floating-point tolerance.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mainswitch {

using BigInt = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool symmetric() const;

  // 0-based element access.
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<BigInt> column(std::size_t j) const;
  std::vector<BigInt> apply(std::span<const BigInt> x) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Integer polynomial with coefficients stored lowest degree first. The
/// zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t k) const { return coeffs_[k]; }
  const BigInt& leading() const { return coeffs_.back(); }

  IntPolynomial derivative() const;
  BigInt content() const;
  IntPolynomial primitive_part() const;
  BigInt evaluate(const BigInt& x) const;
  double evaluate(double x) const;

  std::string to_string(char var = 'x') const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd (positive leading coefficient) via the primitive
/// pseudo-remainder sequence.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

struct MainProfile {
  std::size_t main_count = 0;
  std::size_t distinct_count = 0;
  bool all_main = false;

  friend bool operator==(const MainProfile&, const MainProfile&) = default;
};

/// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier
/// recurrence. All divisions in the recurrence are exact.
IntPolynomial char_poly(const IntMatrix& a);

/// Number of distinct roots of a characteristic polynomial of a symmetric
/// matrix: deg(p / gcd(p, p')).
std::size_t distinct_eigenvalue_count(const IntPolynomial& p);

/// Columns j, Aj, ..., A^(n-1) j.
IntMatrix walk_matrix(const IntMatrix& a);

/// Rank over the rationals by Bareiss fraction-free elimination.
std::size_t rank_exact(const IntMatrix& m);

/// Rank of the walk matrix (number of main eigenvalues) together with the
/// number of distinct eigenvalues.
MainProfile main_profile(const IntMatrix& a);

/// Same as main_profile when the distinct count is already known, which is
/// the case for every signing of a fixed underlying graph.
MainProfile main_profile(const IntMatrix& a, std::size_t distinct_count);

}  // namespace mainswitch
