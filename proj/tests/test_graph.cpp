#include <doctest.h>

#include <optional>
#include <random>

#include "helpers.hpp"
#include "mainswitch/catalog.hpp"
#include "mainswitch/graph6.hpp"

using namespace mainswitch;

namespace {

// Straight bit-by-bit decoder, kept apart from the library codec.
std::vector<std::pair<int, int>> reference_graph6_edges(const std::string& s, int& n) {
  n = s[0] - 63;
  std::vector<int> bits;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const int c = s[k] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((c >> b) & 1);
  }
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits.at(k++)) edges.emplace_back(i + 1, j + 1);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
  return out;
}

IntMatrix conjugate(const IntMatrix& a, const Switching& x) {
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const int si = x.contains(i + 1) ? -1 : 1;
      const int sj = x.contains(j + 1) ? -1 : 1;
      out(i, j) = a(i, j) * si * sj;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 decodes the small complete graphs") {
  const Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(k2.adjacent(1, 2));

  const Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);

  const Graph k3 = parse_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
}

TEST_CASE("graph6 agrees with a reference decoder") {
  // P5 and the Petersen graph as written by networkx
  for (std::string s : {"DhC", "IheA@GUAo", "Bw", "A_", "C^", "FFzfw", "GFCWw{"}) {
    int n = 0;
    const auto ref = reference_graph6_edges(s, n);
    const Graph g = parse_graph6(s);
    CHECK(static_cast<int>(g.order()) == n);
    CHECK(edge_pairs(g) == ref);
    CHECK(to_graph6(g) == s);
  }
  const Graph petersen = parse_graph6("IheA@GUAo");
  CHECK(petersen.size() == 15);
  CHECK(petersen.regular());
}

TEST_CASE("graph6 header and whitespace are tolerated") {
  CHECK(parse_graph6(">>graph6<<Bw\n") == parse_graph6("Bw"));
  CHECK(parse_graph6("  A_  ") == parse_graph6("A_"));
}

TEST_CASE("graph6 rejects malformed records with offsets") {
  auto offset_of = [](std::string_view s) -> std::optional<std::size_t> {
    try {
      parse_graph6(s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::nullopt;
  };
  CHECK(offset_of("").has_value());
  CHECK(offset_of("B") == std::size_t{1});        // field truncated
  CHECK(offset_of("Bww").has_value());             // trailing byte
  CHECK(offset_of("A`") == std::size_t{1});        // padding bit set
  CHECK(offset_of("~??") == std::size_t{0});       // long-order form
  CHECK(offset_of("B\x01").has_value());           // character below 63
  CHECK(offset_of(">>graph5<<Bw").has_value());
}

TEST_CASE("graph6 round-trips every catalog graph") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("signed edge lists") {
  const SignedGraph k2 = parse_signed_edge_list("2 1\n1 2 -");
  CHECK(k2.order() == 2);
  CHECK(k2.sign(1, 2) == -1);

  const SignedGraph tri = parse_signed_edge_list("3 3\n1 2 +\n1 3 +\n2 3 -");
  CHECK(tri.sign(1, 2) == 1);
  CHECK(tri.sign(1, 3) == 1);
  CHECK(tri.sign(2, 3) == -1);
  CHECK(tri.negative_edges() == 1);
  CHECK(parse_signed_edge_list(to_signed_edge_list(tri)) == tri);

  CHECK_THROWS_AS(parse_signed_edge_list("2 2\n1 2 +\n1 2 -"), ParseError);
  CHECK_THROWS_AS(parse_signed_edge_list("2 1\n1 1 +"), ParseError);
  CHECK_THROWS_AS(parse_signed_edge_list("3 1\n2 1 +"), ParseError);
  CHECK_THROWS_AS(parse_signed_edge_list("2 1\n1 2 x"), ParseError);
  CHECK_THROWS_AS(parse_signed_edge_list("2 1\n1 3 +"), ParseError);
  CHECK_THROWS_AS(parse_signed_edge_list("2 1\n1 2 + 7"), ParseError);
  CHECK_THROWS_AS(parse_signed_edge_list("3 2\n1 2 +"), ParseError);
}

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
  const Graph g(3, {{3, 1}});
  CHECK(g.edges().front() == Edge{1, 3});
  CHECK_FALSE(g.connected());
}

TEST_CASE("S_{n,r} layout") {
  const Graph s52 = make_snr({5, 2});
  CHECK(s52.size() == 5);
  CHECK(std::vector<std::size_t>{s52.degree(1), s52.degree(2), s52.degree(3), s52.degree(4), s52.degree(5)} ==
        std::vector<std::size_t>{1, 1, 4, 2, 2});

  // paw: triangle on v2 v3 v4 with v1 hanging at v2
  const Graph paw = make_snr({4, 1});
  CHECK(paw == Graph(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}}));

  CHECK_THROWS_AS(make_snr({3, 3}), std::invalid_argument);

  for (std::size_t r = 1; r <= 6; ++r) {
    for (std::size_t n = r + 1; n <= r + 7; ++n) {
      const Graph g = make_snr({n, r});
      CHECK(g.size() == (n - r) * (n - r - 1) / 2 + r);
      for (Vertex v = 1; v <= r; ++v) CHECK(g.degree(v) == 1);
      CHECK(g.degree(r + 1) == n - 1);
      for (Vertex v = r + 2; v <= n; ++v) CHECK(g.degree(v) == n - r - 1);
    }
  }
}

TEST_CASE("complete multipartite layout") {
  const MultipartiteParams k32({{1, 3}, {1, 2}});
  const Graph g = make_multipartite(k32);
  CHECK(g.order() == 5);
  CHECK(g.size() == 6);

  const MultipartiteParams k221({{2, 2}, {1, 1}});
  CHECK(k221.order() == 5);
  CHECK(make_multipartite(k221).size() == 8);
  CHECK(k221.part(0, 1) == std::vector<Vertex>{3, 4});
  CHECK(k221.offset(1) == 4);
  CHECK(k221.block_of(5) == 1);
  CHECK(k221.zero_multiplicity() == 2);

  CHECK_THROWS_AS(MultipartiteParams({{1, 2}, {1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(MultipartiteParams({{0, 2}}), std::invalid_argument);
  CHECK(MultipartiteParams::parse("2x3,1x1") == MultipartiteParams({{2, 3}, {1, 1}}));
  CHECK(MultipartiteParams::parse("1*3,1*2") == k32);
  CHECK_THROWS(MultipartiteParams::parse("2x"));
  CHECK_THROWS(MultipartiteParams::parse("1x2,1x2"));

  // parts are independent, everything across parts adjacent
  const MultipartiteParams p({{2, 3}, {3, 2}, {2, 1}});
  const Graph h = make_multipartite(p);
  for (Vertex u = 1; u <= p.order(); ++u) {
    for (Vertex v = u + 1; v <= p.order(); ++v) {
      const bool same = p.block_of(u) == p.block_of(v) &&
                        (u - p.offset(p.block_of(u)) - 1) / p.part_size(p.block_of(u)) ==
                            (v - p.offset(p.block_of(v)) - 1) / p.part_size(p.block_of(v));
      CHECK(h.adjacent(u, v) == !same);
    }
  }
}

TEST_CASE("switching examples") {
  const Graph k2(2, {{1, 2}});
  CHECK(apply_switching(SignedGraph(k2), Switching({1})).sign(1, 2) == -1);

  const Graph k3 = parse_graph6("Bw");
  CHECK(apply_switching(SignedGraph(k3), Switching()) == SignedGraph(k3));
  const SignedGraph s = apply_switching(SignedGraph(k3), Switching({1}));
  CHECK(s.sign(1, 2) == -1);
  CHECK(s.sign(1, 3) == -1);
  CHECK(s.sign(2, 3) == 1);

  CHECK_THROWS_AS(Switching({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Switching({0}), std::invalid_argument);
  CHECK_THROWS_AS(apply_switching(SignedGraph(k3), Switching({4})), std::out_of_range);
  CHECK(to_string(Switching({5, 1})) == "{1,5}");
}

TEST_CASE("adjacency matrices") {
  const Graph k2(2, {{1, 2}});
  const IntMatrix pos = adjacency_matrix(SignedGraph(k2));
  CHECK(pos(0, 1) == 1);
  CHECK(pos(0, 0) == 0);
  const IntMatrix neg = adjacency_matrix(SignedGraph(k2, {Sign::negative}));
  CHECK(neg(0, 1) == -1);
  CHECK(neg(1, 0) == -1);

  const SignedGraph tri(parse_graph6("Bw"), {Sign::negative, Sign::negative, Sign::positive});
  const IntMatrix a = adjacency_matrix(tri);
  const int expected[3][3] = {{0, -1, -1}, {-1, 0, 1}, {-1, 1, 0}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(a(i, j) == expected[i][j]);
  }
}

TEST_CASE("switching is conjugation by a signature matrix") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const SignedGraph g = testing::random_signing(rng, testing::random_graph(rng, n, 0.5));
    const Switching x = testing::random_switching(rng, n);
    CHECK(adjacency_matrix(apply_switching(g, x)) == conjugate(adjacency_matrix(g), x));
    CHECK(apply_switching(g, x) == apply_switching(g, x.complement(n)));
    CHECK(apply_switching(apply_switching(g, x), x) == g);
  }
}
