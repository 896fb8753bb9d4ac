#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>
#include <set>

#include "mainswitch/constructions.hpp"
#include "mainswitch/search.hpp"
#include "mainswitch/spectral.hpp"

using namespace mainswitch;

namespace {

std::vector<double> vec(std::initializer_list<double> v) { return v; }

std::vector<double> sums(const CandidateFamily<long>& f) {
  std::vector<double> out;
  for (const auto& m : f.members) out.push_back(static_cast<double>(m.sum()));
  return out;
}

void check_result(const ConstructionResult& r) {
  CHECK(r.verified);
  CHECK(r.profile.all_main);
  CHECK(r.profile.main_count == r.profile.distinct_count);
  CHECK(r.witnesses.size() == r.profile.distinct_count);
  CHECK(witnesses_valid(r));
  const SignedGraph g = apply_switching(SignedGraph(r.graph), r.switching);
  std::vector<double> seen;
  for (const auto& w : r.witnesses) {
    CHECK(witness_residual(g, w) <= 1e-8);
    for (double s : seen) CHECK(std::abs(s - w.eigenvalue) > 1e-6);
    seen.push_back(w.eigenvalue);
  }
}

// Every parameter set with n <= max_n, t strictly decreasing.
void each_multipartite(std::size_t max_n, const std::function<void(const MultipartiteParams&)>& fn) {
  std::vector<Block> blocks;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t max_t, std::size_t left) {
    if (!blocks.empty()) fn(MultipartiteParams(blocks));
    for (std::size_t t = 1; t < max_t; ++t) {
      for (std::size_t l = 1; l * t <= left; ++l) {
        blocks.push_back({l, t});
        rec(t, left - l * t);
        blocks.pop_back();
      }
    }
  };
  rec(max_n + 1, max_n);
}

}  // namespace

TEST_CASE("flip") {
  CHECK(flip(vec({1, 2, 3}), {2}) == vec({1, -2, 3}));
  CHECK(flip(vec({1, 1}), {}) == vec({1, 1}));
  CHECK(flip(vec({1, 2}), {1, 2}) == vec({-1, -2}));
  CHECK_THROWS_AS(flip(vec({1, 2}), {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(flip(vec({1, 2}), {3}), std::out_of_range);
  CHECK_THROWS_AS(flip(vec({1, 2}), {0}), std::out_of_range);
}

TEST_CASE("candidate families") {
  const auto f = candidate_family_distinct<long>({1, 2, 3}, {1, 2, 3});
  CHECK(f.members.size() == 4);
  CHECK(sums(f) == vec({6, 4, 2, 0}));
  CHECK(f.zero_sum_members() == 1);
  CHECK_THROWS_AS(candidate_family_distinct<long>({1, 1}, {1, 2}), std::invalid_argument);
  const auto g = candidate_family_distinct<long>({1, -1, 5}, {1, 3});
  CHECK(sums(g) == vec({5, 3, -5}));
  CHECK(g.zero_sum_members() == 0);

  const auto e = candidate_family_equal<long>({1, 1, 1}, {1, 2, 3});
  CHECK(sums(e) == vec({3, 1, -1, -3}));
  CHECK(e.zero_sum_members() == 0);
  const auto e2 = candidate_family_equal<long>({2, 2, -4}, {1, 2});
  CHECK(sums(e2) == vec({0, -4, -8}));
  CHECK(e2.zero_sum_members() == 1);
  CHECK_THROWS_AS(candidate_family_equal<long>({1, 0}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(candidate_family_equal<long>({1, 2}, {1, 2}), std::invalid_argument);
}

TEST_CASE("at most one zero-sum member in random families") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> value(-20, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    std::vector<long> beta(n);
    for (auto& b : beta) b = value(rng);
    std::vector<Vertex> idx;
    std::set<long> used;
    for (Vertex k = 1; k <= n; ++k) {
      if (beta[k - 1] != 0 && !used.contains(beta[k - 1]) && rng() % 2 == 0) {
        idx.push_back(k);
        used.insert(beta[k - 1]);
      }
    }
    CHECK(candidate_family_distinct(beta, idx).zero_sum_members() <= 1);

    std::vector<long> eq = beta;
    long c = value(rng);
    if (c == 0) c = 7;
    std::vector<Vertex> prefix;
    for (Vertex k = 1; k <= n; ++k) {
      if (rng() % 2 == 0) {
        eq[k - 1] = c;
        prefix.push_back(k);
      }
    }
    std::shuffle(prefix.begin(), prefix.end(), rng);
    CHECK(candidate_family_equal(eq, prefix).zero_sum_members() <= 1);
  }
}

TEST_CASE("duplicate vectors in local indices") {
  using V = std::vector<std::vector<double>>;
  CHECK(duplicate_switch_eigvecs(3, 1) == V{{1, 1, 0}, {1, 0, 1}});
  CHECK(duplicate_switch_eigvecs(2, 1) == V{{1, 1}});
  CHECK(duplicate_switch_eigvecs(4, 2) == V{{1, 0, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}});
  CHECK(duplicate_eigenvalue(DuplicateKind::open) == 0.0);
  CHECK(duplicate_eigenvalue(DuplicateKind::closed) == -1.0);
}

TEST_CASE("duplicate vectors are eigenvectors after switching") {
  // open class: the pendants of S_{7,4}; closed class: the clique rest
  const Graph g = make_snr({7, 4});
  for (std::size_t t = 1; t < 4; ++t) {
    std::vector<Vertex> cls{1, 2, 3, 4};
    std::vector<Vertex> sw(cls.begin(), cls.begin() + static_cast<std::ptrdiff_t>(t));
    const SignedGraph h = apply_switching(SignedGraph(g), Switching(sw));
    for (const auto& v : duplicate_switch_eigvecs(g, cls, t, DuplicateKind::open)) {
      CHECK(witness_residual(h, {0.0, v}) <= 1e-12);
    }
  }
  const SignedGraph h = apply_switching(SignedGraph(g), Switching({7}));
  for (const auto& v : duplicate_switch_eigvecs(g, {7, 6}, 1, DuplicateKind::closed)) {
    CHECK(witness_residual(h, {-1.0, v}) <= 1e-12);
  }
  CHECK_THROWS(duplicate_switch_eigvecs(g, {1, 5}, 1, DuplicateKind::open));
  CHECK_THROWS(duplicate_switch_eigvecs(g, {6, 7}, 1, DuplicateKind::open));
}

TEST_CASE("S_{n,r} eigenvectors") {
  const auto roots = snr_cubic_roots(5, 2);
  for (double l : roots) {
    const auto x = snr_eigvec(5, 2, l);
    CHECK(x[0] == 1.0);
    CHECK(x[2] == doctest::Approx(l));
    CHECK(witness_residual(SignedGraph(make_snr({5, 2})), {l, x}) <= 1e-8);
  }
  CHECK_THROWS_AS(snr_eigvec(5, 2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(snr_eigvec(5, 2, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(snr_eigvec(5, 2, 1.0), std::invalid_argument);
}

TEST_CASE("S_{n,r} construction examples") {
  const auto r51 = snr_all_main_switching(5, 1);
  CHECK(r51.switching == Switching({1, 5}));
  check_result(r51);

  for (std::size_t r = 3; r <= 8; ++r) {
    const auto res = snr_all_main_switching(r + 3, r);
    CHECK(res.switching == Switching({1, r + 3}));
    check_result(res);
  }

  const auto r124 = snr_all_main_switching(12, 4);
  const std::set<std::vector<Vertex>> allowed{{1, 12}, {1, 2, 12}, {1, 5, 12}, {1, 11, 12}};
  CHECK(allowed.contains(r124.switching.vertices()));
  check_result(r124);

  const auto s52 = snr_all_main_switching(5, 2);
  CHECK(s52.profile == MainProfile{5, 5, true});

  CHECK_THROWS_AS(snr_all_main_switching(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(snr_all_main_switching(4, 0), std::invalid_argument);
}

TEST_CASE("S_{n,r} construction on the grid") {
  for (std::size_t r = 1; r <= 10; ++r) {
    for (std::size_t n = r + 3; n <= r + 12; ++n) {
      CAPTURE(n);
      CAPTURE(r);
      check_result(snr_all_main_switching(n, r));
    }
  }
}

TEST_CASE("-t_i eigenvectors") {
  const MultipartiteParams p({{2, 2}});
  const auto v = multipartite_ti_eigvec(p, 0, 1, 0);
  CHECK(v == vec({-1, 1, -1, -1}));

  const MultipartiteParams q({{3, 3}, {1, 1}});
  const auto w = multipartite_ti_eigvec(q, 0, 2, 1);
  double sum = 0.0;
  for (double x : w) sum += x;
  CHECK(sum == doctest::Approx(-2.0));
  const SignedGraph h = apply_switching(SignedGraph(make_multipartite(q)), Switching({1, 2, 4}));
  CHECK(witness_residual(h, {-3.0, w}) <= 1e-12);

  CHECK_THROWS_AS(multipartite_ti_eigvec(p, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(multipartite_ti_eigvec(MultipartiteParams({{1, 3}}), 0, 1, 0), std::invalid_argument);
}

TEST_CASE("switching rules inside a block") {
  const MultipartiteParams p({{2, 3}, {1, 1}});
  CHECK(next_switched_in_block(p, Switching({1}), 0, 2) == std::vector<Vertex>{2, 4});
  CHECK(next_switched_in_block(p, Switching({1, 2}), 0, 1) == std::vector<Vertex>{4});
  CHECK(next_switched_in_block(p, Switching(), 0, 2) == std::vector<Vertex>{1, 2});
  // parts of size 4 fall back to smallest labels
  const MultipartiteParams q({{2, 4}});
  CHECK(next_switched_in_block(q, Switching({1}), 0, 2) == std::vector<Vertex>{2, 3});
  // a lone part of size 3 is not spread
  const MultipartiteParams r({{1, 3}, {1, 1}});
  CHECK(next_switched_in_block(r, Switching({1}), 0, 2) == std::vector<Vertex>{2, 3});
  CHECK_THROWS_AS(next_switched_in_block(r, Switching({1}), 0, 3), ConstructionError);
}

TEST_CASE("multipartite construction examples") {
  const auto k33 = multipartite_all_main_switching(MultipartiteParams({{2, 3}}));
  CHECK(k33.switching == Switching({1}));
  check_result(k33);
  const auto spec = multipartite_spectrum(MultipartiteParams({{2, 3}}));
  CHECK(spec.zero_mult == 4);
  CHECK(spec.secular_roots == std::vector<double>{3.0});

  check_result(multipartite_all_main_switching(MultipartiteParams({{1, 3}, {1, 2}, {1, 1}})));
  check_result(multipartite_all_main_switching(MultipartiteParams({{2, 2}, {1, 1}})));

  const auto kn = multipartite_all_main_switching(MultipartiteParams({{6, 1}}));
  CHECK(kn.switching == Switching({1}));
  check_result(kn);

  CHECK_THROWS_AS(multipartite_all_main_switching(MultipartiteParams({{2, 1}})), NoAllMainSwitching);
  CHECK_THROWS_AS(multipartite_all_main_switching(MultipartiteParams({{1, 2}, {2, 1}})), NoAllMainSwitching);
  CHECK(is_k2(MultipartiteParams({{2, 1}})));
  CHECK(is_k4_minus_edge(MultipartiteParams({{1, 2}, {2, 1}})));
  CHECK_FALSE(is_k2(MultipartiteParams({{3, 1}})));
}

TEST_CASE("multipartite construction on every layout up to 20 vertices") {
  std::size_t rejected = 0;
  each_multipartite(20, [&](const MultipartiteParams& p) {
    CAPTURE(p.to_string());
    if (is_k2(p) || is_k4_minus_edge(p)) {
      CHECK_THROWS_AS(multipartite_all_main_switching(p), NoAllMainSwitching);
      ++rejected;
      return;
    }
    const auto r = multipartite_all_main_switching(p);
    check_result(r);
    if (r.delegated) CHECK(p.order() <= 7);
  });
  CHECK(rejected == 2);
}

TEST_CASE("one vertex per part") {
  const auto k32 = proposition_one_per_part(MultipartiteParams({{1, 3}, {1, 2}}));
  CHECK(k32.switching == Switching({1, 4}));
  check_result(k32);
  const auto k432 = proposition_one_per_part(MultipartiteParams({{1, 4}, {1, 3}, {1, 2}}));
  CHECK(k432.switching == Switching({1, 5, 8}));
  check_result(k432);

  CHECK_THROWS_AS(proposition_one_per_part(MultipartiteParams({{2, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(proposition_one_per_part(MultipartiteParams({{1, 3}, {1, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(proposition_one_per_part(MultipartiteParams({{1, 3}})), std::invalid_argument);

  // every y_i = 1/(lambda + t_i) keeps the entry-sum away from zero
  const MultipartiteParams p({{1, 7}, {1, 5}, {1, 4}, {1, 2}});
  for (double l : multipartite_secular_roots(p)) {
    const auto v = one_per_part_vector(p, l);
    double sum = 0.0;
    for (double x : v) sum += x;
    CHECK(std::abs(sum) > 1e-9);
  }
}

TEST_CASE("constructions agree with the exhaustive search on small graphs") {
  for (std::size_t r = 1; r + 3 <= 7; ++r) {
    for (std::size_t n = r + 3; n <= 7; ++n) {
      CHECK(snr_all_main_switching(n, r).verified);
      CHECK(find_all_main_switching(make_snr({n, r})).has_value());
    }
  }
  each_multipartite(7, [&](const MultipartiteParams& p) {
    if (p.total_parts() == 1 || is_k2(p) || is_k4_minus_edge(p)) return;
    CAPTURE(p.to_string());
    CHECK(multipartite_all_main_switching(p).verified);
    CHECK(find_all_main_switching(make_multipartite(p)).has_value());
  });
}
