#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sepcol/assignments.hpp"
#include "sepcol/exact_solver.hpp"
#include "sepcol/plane_graph.hpp"

namespace sepcol {

/// A plane graph, a precoloured path of length at most one on its outer walk,
/// and lists with
///   |L(v)| >= 4 off the outer walk, >= 3 on it (off the path), >= 1 on the path,
///   |L(u) & L(v)| <= 2 on every edge,
///   no triangle whose three lists share exactly two colours.
struct ExtensionInstance {
  PlaneGraph graph;
  PrecolouredPath path;
  ListAssignment lists;
};

/// A clique (at most four vertices in a plane graph) meeting every offensive
/// triangle.
struct HittingClique {
  std::vector<Vertex> vertices;
};

/// Counters describing which reductions a run used.
struct ExtensionStats {
  std::size_t calls = 0;
  std::size_t max_depth = 0;
  std::size_t base_cases = 0;
  std::size_t component_splits = 0;
  std::size_t pins_added = 0;
  std::size_t cut_vertex_splits = 0;
  std::size_t chord_splits = 0;
  std::size_t edge_drops = 0;      // colour of v1 missing from L(v2): drop v1v2
  std::size_t v2_reductions = 0;   // some colour of L(v2) missing from L(v3)
  std::size_t v3_reductions = 0;   // the third colour of v3 missing from L(v4)
  std::size_t pair_reductions = 0; // colour v2 and v3 together
  std::size_t trimmed_colours = 0;

  ExtensionStats& operator+=(const ExtensionStats& other);
};

/// First violated hypothesis of an extension instance, if any.
[[nodiscard]] std::optional<std::string> extension_violation(const ExtensionInstance& inst);

/// Extends the path colouring to the whole graph by induction: split at cut
/// vertices and chords, then peel v2 and/or v3 off the chordless outer cycle
/// v0 v1 v2 ... with P = v0 v1.
/// Throws HypothesisViolated if the instance is not admissible and
/// InternalContradiction if a reduction ever produces an inadmissible
/// sub-instance.
[[nodiscard]] Colouring extend_precoloured(const ExtensionInstance& inst, ExtensionStats* stats = nullptr);

/// Colours a plane graph with a (4,2)-list assignment and no offensive
/// triangles.
[[nodiscard]] Colouring colour_no_offensive(const PlaneGraph& g, const ListAssignment& lists,
                                            ExtensionStats* stats = nullptr);

/// Colours a plane graph with a (4,2)-list assignment given a clique that
/// meets every offensive triangle.
[[nodiscard]] Colouring colour_with_clique(const PlaneGraph& g, const ListAssignment& lists, const HittingClique& clique,
                                           ExtensionStats* stats = nullptr);

/// Smallest clique (then lexicographically first) meeting every offensive
/// triangle; the empty clique when there are none; nullopt if no clique works.
[[nodiscard]] std::optional<HittingClique> find_hitting_clique(const PlaneGraph& g, const ListAssignment& lists);

}  // namespace sepcol
