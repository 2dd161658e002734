#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sepcol/assignments.hpp"
#include "sepcol/plane_graph.hpp"

namespace sepcol {

using Colouring = std::map<Vertex, Colour>;

enum class SearchStatus { Colourable, NotColourable, BudgetExceeded };

[[nodiscard]] const char* to_string(SearchStatus s) noexcept;

struct SearchOutcome {
  SearchStatus status = SearchStatus::NotColourable;
  std::optional<Colouring> witness;  // present iff status == Colourable
  std::uint64_t nodes = 0;
};

struct SolveOptions {
  /// Maximum number of value assignments tried; 0 means unlimited.
  std::uint64_t node_budget = 0;
};

struct CheckReport {
  bool proper = true;
  std::vector<Edge> violated_edges;
  std::vector<Vertex> off_list;
};

/// List semantics: adjacent vertices must get different tokens.
/// Throws PartialColouring if some vertex of g is uncoloured.
[[nodiscard]] CheckReport check(const PlaneGraph& g, const ListAssignment& lists, const Colouring& colouring);
/// Correspondence semantics: the chosen pair on uv must not be matched.
[[nodiscard]] CheckReport check(const PlaneGraph& g, const CorrespondenceAssignment& a, const Colouring& colouring);

/// Complete backtracking search. Domains are filtered forward after every
/// assignment, the residual constraint graph is split into connected
/// components that are solved independently, and the branching variable is
/// a forced one if any, otherwise the one with the smallest ratio of domain
/// size to residual degree (ties by vertex order).
[[nodiscard]] SearchOutcome solve_list(const PlaneGraph& g, const ListAssignment& lists, SolveOptions opts = {});
[[nodiscard]] SearchOutcome solve_corr(const PlaneGraph& g, const CorrespondenceAssignment& a, SolveOptions opts = {});

/// All proper colourings in lexicographic order of (vertex order, colour
/// order). Throws LimitExceeded if there are more than `limit`.
[[nodiscard]] std::vector<Colouring> enumerate_corr(const PlaneGraph& g, const CorrespondenceAssignment& a,
                                                    std::size_t limit);
[[nodiscard]] std::vector<Colouring> enumerate_list(const PlaneGraph& g, const ListAssignment& lists,
                                                    std::size_t limit);

}  // namespace sepcol
