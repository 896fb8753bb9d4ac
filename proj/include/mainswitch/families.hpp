#pragma once

// Sign-flipped copies of an eigenvector and the two candidate families
// that contain at most one vector with zero entry-sum.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mainswitch/graph.hpp"

namespace mainswitch {

/// beta with the entries at the given 1-based indices negated.
template <typename T>
std::vector<T> flip(std::span<const T> beta, std::span<const Vertex> indices) {
  std::vector<T> out(beta.begin(), beta.end());
  std::vector<Vertex> seen(indices.begin(), indices.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw std::invalid_argument("flip indices must be distinct");
  }
  for (Vertex k : indices) {
    if (k < 1 || k > out.size()) {
      throw std::out_of_range("flip index " + std::to_string(k) + " outside 1.." +
                              std::to_string(out.size()));
    }
    out[k - 1] = -out[k - 1];
  }
  return out;
}

template <typename T>
std::vector<T> flip(const std::vector<T>& beta, const std::vector<Vertex>& indices) {
  return flip(std::span<const T>(beta), std::span<const Vertex>(indices));
}

template <typename T>
T entry_sum(std::span<const T> v) {
  T acc = T(0);
  for (const auto& x : v) acc += x;
  return acc;
}

template <typename T>
struct FlipVector {
  std::vector<T> base;
  std::vector<Vertex> flips;

  std::vector<T> materialize() const { return flip(base, flips); }
  T sum() const {
    const auto v = materialize();
    return entry_sum(std::span<const T>(v));
  }
};

enum class FamilyKind {
  /// Single flips of pairwise distinct nonzero entries.
  distinct_values,
  /// Nested prefix flips of equal nonzero entries.
  equal_values,
};

template <typename T>
struct CandidateFamily {
  FamilyKind kind = FamilyKind::distinct_values;
  std::vector<FlipVector<T>> members;

  std::size_t zero_sum_members() const {
    return static_cast<std::size_t>(std::count_if(
        members.begin(), members.end(), [](const FlipVector<T>& m) { return m.sum() == T(0); }));
  }
};

/// {beta, beta_{i1}, ..., beta_{ik}}. The flipped entries must be nonzero
/// and pairwise distinct.
template <typename T>
CandidateFamily<T> candidate_family_distinct(std::vector<T> beta, const std::vector<Vertex>& indices) {
  for (std::size_t a = 0; a < indices.size(); ++a) {
    if (indices[a] < 1 || indices[a] > beta.size()) throw std::out_of_range("family index out of range");
    const T& va = beta[indices[a] - 1];
    if (va == T(0)) throw std::invalid_argument("flipped entry " + std::to_string(indices[a]) + " is zero");
    for (std::size_t b = 0; b < a; ++b) {
      if (beta[indices[b] - 1] == va) {
        throw std::invalid_argument("flipped entries " + std::to_string(indices[b]) + " and " +
                                    std::to_string(indices[a]) + " are equal");
      }
    }
  }
  CandidateFamily<T> family;
  family.kind = FamilyKind::distinct_values;
  family.members.push_back({beta, {}});
  for (Vertex k : indices) family.members.push_back({beta, {k}});
  return family;
}

/// {beta, beta_{i1}, beta_{i1,i2}, ..., beta_{i1..ik}}. The flipped
/// entries must be equal and nonzero.
template <typename T>
CandidateFamily<T> candidate_family_equal(std::vector<T> beta, const std::vector<Vertex>& indices) {
  for (Vertex k : indices) {
    if (k < 1 || k > beta.size()) throw std::out_of_range("family index out of range");
    if (beta[k - 1] == T(0)) throw std::invalid_argument("flipped entry " + std::to_string(k) + " is zero");
    if (beta[k - 1] != beta[indices.front() - 1]) {
      throw std::invalid_argument("flipped entries must be equal");
    }
  }
  CandidateFamily<T> family;
  family.kind = FamilyKind::equal_values;
  std::vector<Vertex> prefix;
  family.members.push_back({beta, {}});
  for (Vertex k : indices) {
    prefix.push_back(k);
    family.members.push_back({beta, prefix});
  }
  return family;
}

}  // namespace mainswitch
