#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sepcol/assignments.hpp"
#include "sepcol/exact_solver.hpp"
#include "sepcol/plane_graph.hpp"

namespace sepcol {

/// One copy of the gadget: its colour pair and the vertex playing each role
/// "v1".."v9".
struct GadgetCopy {
  Colour a;
  Colour b;
  std::map<std::string, Vertex> roles;
};

struct GadgetInstance {
  PlaneGraph graph;
  CorrespondenceAssignment assignment;
  Vertex u1;  // the vertex (or hub) playing v1
  Vertex u2;  // the vertex (or hub) playing v2
  std::vector<GadgetCopy> copies;
};

/// The 9-vertex gadget with L(v1) = {a}, L(v2) = {b}. Its outer cycle is
/// v1 v3 v2 v4. Throws BadParameters if a == b, a token is empty, or a token
/// is one of "1".."6".
[[nodiscard]] GadgetInstance build_gadget_h(const Colour& a, const Colour& b);

/// Sixteen gadgets, one per (a, b) in {7..10} x {11..14}, glued at hubs u1 and
/// u2 with L(u1) = {7,8,9,10} and L(u2) = {11,12,13,14}. Copy vertices are
/// named "v<role>_<a>_<b>" and the copies are drawn as a fan between the hubs.
[[nodiscard]] GadgetInstance build_counterexample_g42();

/// Vertices and edges of one copy, hubs included.
[[nodiscard]] PlaneGraph copy_subgraph(const GadgetInstance& inst, const GadgetCopy& copy);

struct CopyVerdict {
  Colour c1;  // colour of u1
  Colour c2;  // colour of u2
  std::size_t copy = 0;
  std::size_t free_vertices = 0;
  std::uint64_t search_space = 0;
  std::size_t colourings = 0;
};

struct CounterexampleReport {
  std::vector<CopyVerdict> entries;
  SearchStatus whole_graph = SearchStatus::NotColourable;
  std::uint64_t whole_graph_nodes = 0;
};

/// For every colour pair of the hubs, enumerates the copy with that (a, b)
/// and confirms it has no colouring; then runs solve_corr on the whole graph.
/// Throws VerificationFailed if any check comes out colourable.
[[nodiscard]] CounterexampleReport verify_counterexample(const GadgetInstance& inst);

struct Not43Report {
  std::size_t max_intersection = 0;
  bool list_profile_valid = false;
  bool identity_submatching = false;
  SearchStatus list_status = SearchStatus::Colourable;
  std::uint64_t nodes = 0;
};

/// Confirms the lists form a (4,3)-list assignment, that every matching is a
/// sub-matching of the identity correspondence, and that the lists alone admit
/// no colouring. Throws VerificationFailed otherwise.
[[nodiscard]] Not43Report verify_not_43_choosable(const GadgetInstance& inst);

}  // namespace sepcol
