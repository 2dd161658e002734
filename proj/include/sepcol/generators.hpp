#pragma once

#include <cstddef>
#include <cstdint>

#include "sepcol/assignments.hpp"
#include "sepcol/plane_graph.hpp"

namespace sepcol {

struct PlaneGenOptions {
  bool triangle_free = false;
  /// Edges deleted at random after insertion.
  std::size_t deletions = 0;
};

/// Random plane graph on vertices "0".."n-1" (zero-padded so token order
/// matches insertion order). Each new vertex goes into a random face and is
/// joined to one to three distinct corners of it; with triangle_free it is
/// joined to at most two pairwise non-adjacent corners. Deterministic in
/// (n, seed, options). Throws BadParameters for n == 0.
[[nodiscard]] PlaneGraph gen_random_plane(std::size_t n, std::uint64_t seed, PlaneGenOptions options = {});

struct AssignmentGenOptions {
  bool forbid_offensive = false;
  /// Attempts per vertex before giving up.
  std::size_t retries = 2000;
};

/// Lists of exactly spec.min_list colours from "1".."palette", drawn vertex by
/// vertex and resampled until every edge shares at most spec.max_shared
/// colours (and, with forbid_offensive, no triangle is offensive). Throws
/// BadParameters when the palette is smaller than a list and RetriesExhausted
/// when a vertex cannot be placed.
[[nodiscard]] ListAssignment gen_random_assignment(const PlaneGraph& g, SeparationSpec spec, std::size_t palette,
                                                   std::uint64_t seed, AssignmentGenOptions options = {});

}  // namespace sepcol
