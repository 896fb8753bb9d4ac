#include "mainswitch/graph6.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace mainswitch {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  if (text.substr(begin, kHeader.size()) == kHeader) begin += kHeader.size();
  if (begin == end) throw ParseError("empty graph6 record", begin);

  const int first = static_cast<unsigned char>(text[begin]);
  if (first == 126) {
    throw ParseError("graph6 orders above " + std::to_string(kGraph6MaxOrder) +
                         " are not supported",
                     begin);
  }
  if (first < kBias || first > 126) throw ParseError("malformed graph6 header", begin);
  const std::size_t n = static_cast<std::size_t>(first - kBias);
  if (n == 0) throw ParseError("graph6 record has no vertices", begin);

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t groups = (bits + 5) / 6;
  const std::size_t body = begin + 1;
  if (end - body < groups) {
    throw ParseError("truncated graph6 bit field (expected " + std::to_string(groups) +
                         " bytes, got " + std::to_string(end - body) + ")",
                     end);
  }
  if (end - body > groups) throw ParseError("trailing bytes after graph6 record", body + groups);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t g = 0; g < groups; ++g) {
    const int c = static_cast<unsigned char>(text[body + g]);
    if (c < kBias || c > 126) throw ParseError("character out of graph6 range", body + g);
    const int value = c - kBias;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = ((value >> b) & 1) != 0;
      if (k >= bits) {
        if (set) throw ParseError("nonzero graph6 padding bit", body + g);
        continue;
      }
      if (!set) continue;
      // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
      std::size_t col = 1;
      std::size_t idx = k;
      while (idx >= col) {
        idx -= col;
        ++col;
      }
      edges.push_back({idx + 1, col + 1});
    }
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || n > kGraph6MaxOrder) {
    throw std::invalid_argument("graph6 emitter supports 1.." + std::to_string(kGraph6MaxOrder) +
                                " vertices");
  }
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  bool next(Token& tok) {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    if (pos_ == text_.size()) return false;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
    tok = {text_.substr(start, pos_ - start), start};
    return true;
  }

  Token expect(const char* what) {
    Token tok;
    if (!next(tok)) throw ParseError(std::string("unexpected end of input, expected ") + what, pos_);
    return tok;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t to_count(const Token& tok, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(tok.text) + "'",
                     tok.offset);
  }
  return value;
}

}  // namespace

SignedGraph parse_signed_edge_list(std::string_view text) {
  Tokenizer in(text);
  const Token n_tok = in.expect("vertex count");
  const std::size_t n = to_count(n_tok, "vertex count");
  if (n == 0) throw ParseError("signed edge list needs at least one vertex", n_tok.offset);
  const std::size_t m = to_count(in.expect("edge count"), "edge count");

  std::vector<Edge> edges;
  std::vector<Sign> signs;
  std::set<Edge> seen;
  for (std::size_t k = 0; k < m; ++k) {
    const Token u_tok = in.expect("edge endpoint");
    const Token v_tok = in.expect("edge endpoint");
    const Token s_tok = in.expect("edge sign");
    const std::size_t u = to_count(u_tok, "vertex");
    const std::size_t v = to_count(v_tok, "vertex");
    if (u < 1 || u > n) throw ParseError("vertex " + std::to_string(u) + " out of range", u_tok.offset);
    if (v < 1 || v > n) throw ParseError("vertex " + std::to_string(v) + " out of range", v_tok.offset);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), u_tok.offset);
    if (u > v) throw ParseError("edge endpoints must satisfy u < v", u_tok.offset);
    if (!seen.insert({u, v}).second) {
      throw ParseError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}",
                       u_tok.offset);
    }
    Sign s;
    if (s_tok.text == "+") {
      s = Sign::positive;
    } else if (s_tok.text == "-") {
      s = Sign::negative;
    } else {
      throw ParseError("bad sign token '" + std::string(s_tok.text) + "'", s_tok.offset);
    }
    edges.push_back({u, v});
    signs.push_back(s);
  }
  Token extra;
  if (in.next(extra)) throw ParseError("trailing data after edge list", extra.offset);

  // Graph sorts its edges; carry the signs along.
  Graph g(n, edges);
  std::vector<Sign> sorted(signs.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    sorted[g.edge_index(edges[k].u, edges[k].v)] = signs[k];
  }
  return SignedGraph(std::move(g), std::move(sorted));
}

std::string to_signed_edge_list(const SignedGraph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.graph().size() << '\n';
  const auto& edges = g.graph().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    os << edges[k].u << ' ' << edges[k].v << ' '
       << (g.signs()[k] == Sign::positive ? '+' : '-') << '\n';
  }
  return os.str();
}

}  // namespace mainswitch
