#include "mainswitch/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mainswitch {

RealMatrix RealMatrix::from(const IntMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  }
  return out;
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

std::vector<double> RealMatrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<double> RealMatrix::apply(std::span<const double> x) const {
  if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < cols_; ++k) acc += (*this)(i, k) * x[k];
    y[i] = acc;
  }
  return y;
}

double RealMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (double v : data_) acc += v * v;
  return std::sqrt(acc);
}

EigenSystem eigen_sym(const RealMatrix& input, double tol) {
  if (input.rows() != input.cols()) throw std::invalid_argument("eigen_sym needs a square matrix");
  if (!(tol > 0.0)) throw std::invalid_argument("eigen_sym tolerance must be positive");
  const std::size_t n = input.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(input(i, j) - input(j, i)) > 1e-12) {
        throw std::invalid_argument("eigen_sym needs a symmetric matrix (asymmetry at " +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  RealMatrix a = input;
  RealMatrix v = RealMatrix::identity(n);
  const double threshold = tol * std::max(input.frobenius_norm(), 1e-300);
  constexpr int kMaxSweeps = 100;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    }
    if (off < threshold) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < threshold * 1e-3) continue;
        // Rotation annihilating a(p,q), Golub & Van Loan 8.5.2.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenSystem es;
  es.values.resize(n);
  es.vectors = RealMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    es.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = v(i, order[k]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto x = es.vectors.column(k);
    const auto ax = input.apply(x);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r += (ax[i] - es.values[k] * x[i]) * (ax[i] - es.values[k] * x[i]);
    es.residual_bound = std::max(es.residual_bound, std::sqrt(r));
  }
  return es;
}

std::size_t SpectrumReport::main_count() const {
  return static_cast<std::size_t>(
      std::count_if(groups.begin(), groups.end(), [](const EigenGroup& g) { return g.is_main; }));
}

SpectrumReport classify_main(const EigenSystem& es, std::optional<double> group_eps,
                             std::optional<double> main_eps) {
  const std::size_t n = es.values.size();
  double radius = 0.0;
  for (double v : es.values) radius = std::max(radius, std::abs(v));
  const double gap = group_eps.value_or(1e-8 * std::max(1.0, radius));
  const double mass_floor = main_eps.value_or(1e-8 * std::sqrt(static_cast<double>(n)));
  if (!(gap > 0.0) || !(mass_floor > 0.0)) throw std::invalid_argument("classification thresholds must be positive");

  SpectrumReport report;
  report.n = n;
  std::size_t k = 0;
  while (k < n) {
    std::size_t end = k + 1;
    while (end < n && es.values[end] - es.values[end - 1] <= gap) ++end;
    EigenGroup g;
    double value_sum = 0.0;
    double mass2 = 0.0;
    for (std::size_t c = k; c < end; ++c) {
      value_sum += es.values[c];
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += es.vectors(i, c);
      mass2 += dot * dot;
    }
    g.multiplicity = end - k;
    g.value = value_sum / static_cast<double>(g.multiplicity);
    g.main_mass = std::sqrt(mass2);
    g.is_main = g.main_mass > mass_floor;
    report.groups.push_back(g);
    k = end;
  }
  return report;
}

SpectrumReport spectrum_report(const SignedGraph& g) {
  return classify_main(eigen_sym(RealMatrix::from(adjacency_matrix(g))));
}

double snr_cubic(std::size_t n, std::size_t r, double x) {
  const double c = static_cast<double>(n) - static_cast<double>(r) - 2.0;
  return ((x - c) * x - (static_cast<double>(n) - 1.0)) * x + static_cast<double>(r) * c;
}

namespace {

// Bisection on a sign change, run until the midpoint is no longer
// representable strictly inside the bracket.
template <typename F>
double bisect(F&& f, double lo, double hi) {
  const bool rising = f(lo) < 0.0;
  for (int it = 0; it < 2000; ++it) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == rising) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

}  // namespace

std::array<double, 3> snr_cubic_roots(std::size_t n, std::size_t r) {
  if (r < 1 || n < r + 3) {
    throw std::invalid_argument("cubic roots need r >= 1 and n >= r + 3 (got n=" + std::to_string(n) +
                                ", r=" + std::to_string(r) + ")");
  }
  const double c = static_cast<double>(n - r - 2);
  const double bound = 1.0 + std::max({c, static_cast<double>(n - 1), static_cast<double>(r) * c});
  const double sr = std::sqrt(static_cast<double>(r));
  auto f = [&](double x) { return snr_cubic(n, r, x); };
  return {bisect(f, -bound, 0.0), bisect(f, 0.0, sr), bisect(f, sr, bound)};
}

std::vector<double> SnrSpectrum::eigenvalues() const {
  std::vector<double> out(zero_mult, 0.0);
  out.insert(out.end(), minus_one_mult, -1.0);
  out.insert(out.end(), cubic_roots.begin(), cubic_roots.end());
  std::sort(out.begin(), out.end());
  return out;
}

SnrSpectrum snr_spectrum(std::size_t n, std::size_t r) {
  SnrSpectrum s;
  s.cubic_roots = snr_cubic_roots(n, r);
  s.zero_mult = r - 1;
  s.minus_one_mult = n - r - 2;
  return s;
}

double secular_function(const MultipartiteParams& p, double x) {
  double acc = -1.0;
  for (std::size_t i = 0; i < p.num_blocks(); ++i) {
    acc += static_cast<double>(p.block_order(i)) / (x + static_cast<double>(p.part_size(i)));
  }
  return acc;
}

std::vector<double> multipartite_secular_roots(const MultipartiteParams& p) {
  if (p.total_parts() == 1) return {0.0};
  auto g = [&](double x) { return secular_function(p, x); };
  std::vector<double> roots;
  roots.push_back(bisect(g, 0.0, static_cast<double>(p.order())));
  // Pole intervals from the right: (-t_{s-1}, -t_s), ..., (-t_1, -t_2).
  for (std::size_t k = p.num_blocks() - 1; k-- > 0;) {
    const double left = -static_cast<double>(p.part_size(k));
    const double right = -static_cast<double>(p.part_size(k + 1));
    roots.push_back(bisect(g, left, right));
  }
  return roots;
}

std::vector<double> secular_coordinates(const MultipartiteParams& p, double x) {
  std::vector<double> z(p.num_blocks());
  for (std::size_t i = 0; i < p.num_blocks(); ++i) z[i] = 1.0 / (x + static_cast<double>(p.part_size(i)));
  return z;
}

std::vector<double> MultipartiteSpectrum::eigenvalues() const {
  std::vector<double> out(zero_mult, 0.0);
  for (const auto& [value, mult] : ti_mults) out.insert(out.end(), mult, value);
  out.insert(out.end(), secular_roots.begin(), secular_roots.end());
  std::sort(out.begin(), out.end());
  return out;
}

MultipartiteSpectrum multipartite_spectrum(const MultipartiteParams& p) {
  MultipartiteSpectrum s;
  s.secular_roots = multipartite_secular_roots(p);
  s.zero_mult = p.zero_multiplicity();
  for (std::size_t i = 0; i < p.num_blocks(); ++i) {
    if (p.count(i) >= 2) s.ti_mults.emplace_back(-static_cast<double>(p.part_size(i)), p.count(i) - 1);
  }
  return s;
}

}  // namespace mainswitch
