#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sepcol/plane_graph.hpp"
#include "sepcol/token.hpp"

namespace sepcol {

using ColourSet = std::set<Colour>;

/// (l, k): lists need at least l colours; adjacent lists (or matchings) may
/// share at most k.
struct SeparationSpec {
  std::size_t min_list = 4;
  std::size_t max_shared = 2;
};

/// Map from vertex to its colour list. Empty lists are representable and mean
/// the instance is unsatisfiable.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::map<Vertex, ColourSet> lists) : lists_(std::move(lists)) {}

  [[nodiscard]] const ColourSet& at(const Vertex& v) const;
  [[nodiscard]] bool covers(const Vertex& v) const { return lists_.contains(v); }
  void set(const Vertex& v, ColourSet colours) { lists_[v] = std::move(colours); }
  void erase(const Vertex& v) { lists_.erase(v); }

  [[nodiscard]] const std::map<Vertex, ColourSet>& lists() const noexcept { return lists_; }
  [[nodiscard]] std::vector<Vertex> empty_lists() const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::map<Vertex, ColourSet> lists_;
};

using ColourPair = std::pair<Colour, Colour>;
/// Pairs (c_u, c_v) for an edge read in the direction u -> v.
using Matching = std::set<ColourPair>;

/// Lists plus one partial matching per edge. Matchings are stored once per
/// edge, oriented from the smaller endpoint to the larger one.
class CorrespondenceAssignment {
 public:
  CorrespondenceAssignment() = default;
  explicit CorrespondenceAssignment(ListAssignment base) : base_(std::move(base)) {}

  [[nodiscard]] const ListAssignment& base() const noexcept { return base_; }
  [[nodiscard]] ListAssignment& base() noexcept { return base_; }

  /// Matching of uv oriented as u -> v (pairs flipped when u > v).
  [[nodiscard]] Matching matching(const Vertex& u, const Vertex& v) const;
  void set_matching(const Vertex& u, const Vertex& v, const Matching& pairs);
  void add_pair(const Vertex& u, const Colour& cu, const Vertex& v, const Colour& cv);
  void erase_matching(const Edge& e) { matchings_.erase(e); }
  [[nodiscard]] bool forbids(const Vertex& u, const Colour& cu, const Vertex& v, const Colour& cv) const;

  [[nodiscard]] const std::map<Edge, Matching>& matchings() const noexcept { return matchings_; }

  friend bool operator==(const CorrespondenceAssignment&, const CorrespondenceAssignment&) = default;

 private:
  ListAssignment base_;
  std::map<Edge, Matching> matchings_;
};

struct ListProfileReport {
  SeparationSpec spec;
  std::vector<std::pair<Vertex, std::size_t>> short_lists;
  std::vector<std::pair<Edge, std::size_t>> heavy_edges;
  std::size_t max_intersection = 0;

  [[nodiscard]] bool valid() const { return short_lists.empty() && heavy_edges.empty(); }
};

struct CorrProfileReport {
  SeparationSpec spec;
  std::vector<std::pair<Vertex, std::size_t>> short_lists;
  std::vector<std::pair<Edge, std::size_t>> heavy_matchings;
  std::vector<std::pair<Edge, std::string>> malformed;
  std::size_t max_matching = 0;

  [[nodiscard]] bool valid() const { return short_lists.empty() && heavy_matchings.empty() && malformed.empty(); }
};

[[nodiscard]] std::size_t shared_colours(const ColourSet& a, const ColourSet& b);

/// Throws MissingList when a vertex of g has no list.
void require_cover(const PlaneGraph& g, const ListAssignment& lists);

[[nodiscard]] ListProfileReport validate_list_profile(const PlaneGraph& g, const ListAssignment& lists,
                                                      SeparationSpec spec);

/// Throws MatchingOnNonEdge for a matching stored on a pair that is not an edge.
[[nodiscard]] CorrProfileReport validate_corr_profile(const PlaneGraph& g, const CorrespondenceAssignment& a,
                                                      SeparationSpec spec);

/// Triangles whose three lists share exactly two colours.
[[nodiscard]] std::vector<Triangle> offensive_triangles(const PlaneGraph& g, const ListAssignment& lists);

struct ListEdit {
  enum class Op { Remove, Pin };
  Vertex vertex;
  Op op = Op::Remove;
  Colour colour;

  static ListEdit remove(Vertex v, Colour c) { return {std::move(v), Op::Remove, std::move(c)}; }
  static ListEdit pin(Vertex v, Colour c) { return {std::move(v), Op::Pin, std::move(c)}; }
};

/// Applies removals and pins in order. Removing a colour that is absent is a
/// no-op; pinning to a colour outside the list throws PinNotInList.
[[nodiscard]] ListAssignment restrict(const ListAssignment& lists, const std::vector<ListEdit>& edits);

/// M_uv = {(c, c) : c in L(u) and L(v)} on every edge.
[[nodiscard]] CorrespondenceAssignment identity_correspondence(const PlaneGraph& g, const ListAssignment& lists);

}  // namespace sepcol
