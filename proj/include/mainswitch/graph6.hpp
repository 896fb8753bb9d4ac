#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mainswitch/graph.hpp"

namespace mainswitch {

/// Input text rejected by one of the parsers; offset is the byte position
/// of the offending character in the original text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::size_t kGraph6MaxOrder = 62;

/// One graph6 record (an optional ">>graph6<<" header and surrounding
/// whitespace are accepted). Only the single-byte order form is supported.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// "n m" followed by m lines "u v s", s in {+,-}, 1 <= u < v <= n.
SignedGraph parse_signed_edge_list(std::string_view text);
std::string to_signed_edge_list(const SignedGraph& g);

}  // namespace mainswitch
