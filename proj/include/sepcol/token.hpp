#pragma once

#include <compare>
#include <functional>
#include <ostream>
#include <string>
#include <utility>

namespace sepcol {

/// An opaque string identifier with a total (lexicographic) order.
/// The tag keeps vertex ids and colour tokens from being mixed up.
template <class Tag>
class Token {
 public:
  Token() = default;
  explicit Token(std::string value) : value_(std::move(value)) {}

  [[nodiscard]] const std::string& str() const noexcept { return value_; }
  [[nodiscard]] bool empty() const noexcept { return value_.empty(); }

  friend auto operator<=>(const Token&, const Token&) = default;
  friend bool operator==(const Token&, const Token&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Token& t) { return os << t.value_; }

 private:
  std::string value_;
};

struct VertexTag {};
struct ColourTag {};

using Vertex = Token<VertexTag>;
using Colour = Token<ColourTag>;

/// Directed edge (tail -> head) of an embedded graph.
struct Dart {
  Vertex from;
  Vertex to;

  [[nodiscard]] Dart reversed() const { return {to, from}; }
  friend auto operator<=>(const Dart&, const Dart&) = default;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Undirected edge stored with the smaller endpoint first.
struct Edge {
  Vertex u;
  Vertex v;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::move(a)), v(std::move(b)) {
    if (v < u) std::swap(u, v);
  }
  [[nodiscard]] bool has(const Vertex& x) const { return u == x || v == x; }
  [[nodiscard]] const Vertex& other(const Vertex& x) const { return x == u ? v : u; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << e.u << '-' << e.v; }

inline namespace literals {
inline Vertex operator""_v(const char* s, std::size_t n) { return Vertex(std::string(s, n)); }
inline Colour operator""_c(const char* s, std::size_t n) { return Colour(std::string(s, n)); }
}  // namespace literals

}  // namespace sepcol

template <class Tag>
struct std::hash<sepcol::Token<Tag>> {
  std::size_t operator()(const sepcol::Token<Tag>& t) const noexcept {
    return std::hash<std::string>{}(t.str());
  }
};
