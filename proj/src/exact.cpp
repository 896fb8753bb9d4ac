#include "mainswitch/exact.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mainswitch {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::vector<BigInt> IntMatrix::column(std::size_t j) const {
  std::vector<BigInt> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<BigInt> IntMatrix::apply(std::span<const BigInt> x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  std::vector<BigInt> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      if (a == 1) {
        y[i] += x[k];
      } else if (a == -1) {
        y[i] -= x[k];
      } else {
        y[i] += a * x[k];
      }
    }
  }
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
  IntMatrix c(a.rows(), b.cols());
  // Adjacency matrices are mostly 0/+-1, so skip zeros and avoid multiplies.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (aik == 1) {
          c(i, j) += b(k, j);
        } else if (aik == -1) {
          c(i, j) -= b(k, j);
        } else {
          c(i, j) += aik * b(k, j);
        }
      }
    }
  }
  return c;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    mpz_divexact(out[k].get_mpz_t(), coeffs_[k].get_mpz_t(), g.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const long db = b.degree();
  const BigInt& lb = b.leading();
  std::vector<BigInt> r = a.coeffs();
  long steps = a.degree() - db + 1;
  while (static_cast<long>(r.size()) - 1 >= db && !r.empty()) {
    const long dr = static_cast<long>(r.size()) - 1;
    const BigInt lr = r.back();
    for (auto& c : r) c *= lb;
    for (long k = 0; k <= db; ++k) r[static_cast<std::size_t>(k + dr - db)] -= lr * b[static_cast<std::size_t>(k)];
    while (!r.empty() && sgn(r.back()) == 0) r.pop_back();
    --steps;
  }
  if (steps > 0) {
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    for (auto& c : r) c *= scale;
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x;
}

IntPolynomial char_poly(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    // tr(A M_k) without forming the product
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a(i, j)) != 0) trace += a(i, j) * next(j, i);
      }
    }
    BigInt q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
    m = std::move(next);
  }
  return IntPolynomial(std::move(c));
}

std::size_t distinct_eigenvalue_count(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("distinct root count of the zero polynomial");
  const IntPolynomial g = gcd(p, p.derivative());
  return static_cast<std::size_t>(p.degree() - g.degree());
}

IntMatrix walk_matrix(const IntMatrix& a) {
  if (!a.square()) throw std::invalid_argument("walk matrix of a non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix w(n, n);
  std::vector<BigInt> col(n, BigInt(1));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) w(i, k) = col[i];
    if (k + 1 < n) col = a.apply(col);
  }
  return w;
}

std::size_t rank_exact(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  BigInt prev = 1;
  BigInt num;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    }
    const BigInt& p = m(rank, col);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        num = p * m(i, j) - m(i, col) * m(rank, j);
        assert(mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()));
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, col) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

MainProfile main_profile(const IntMatrix& a, std::size_t distinct_count) {
  if (!a.symmetric()) throw std::invalid_argument("main profile needs a symmetric matrix");
  MainProfile out;
  out.main_count = rank_exact(walk_matrix(a));
  out.distinct_count = distinct_count;
  out.all_main = out.main_count == out.distinct_count;
  return out;
}

MainProfile main_profile(const IntMatrix& a) {
  if (!a.symmetric()) throw std::invalid_argument("main profile needs a symmetric matrix");
  return main_profile(a, distinct_eigenvalue_count(char_poly(a)));
}

}  // namespace mainswitch
