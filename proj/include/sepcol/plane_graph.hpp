#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sepcol/token.hpp"

namespace sepcol {

/// Counter-clockwise cyclic order of neighbours around each vertex.
using Rotation = std::map<Vertex, std::vector<Vertex>>;

using Triangle = std::array<Vertex, 3>;

/// A traced face: the closed sequence of darts with the face on their left.
struct Face {
  std::size_t id = 0;
  std::vector<Dart> walk;

  /// Tails of the walk, in order (vertices may repeat).
  [[nodiscard]] std::vector<Vertex> vertices() const;
  [[nodiscard]] bool contains(const Vertex& v) const;
};

/// Closed boundary walk of an outer face. Empty for edgeless components.
struct BoundaryWalk {
  std::vector<Dart> walk;

  [[nodiscard]] std::vector<Vertex> vertices() const;
  [[nodiscard]] bool empty() const noexcept { return walk.empty(); }
  /// True when the walk visits at least three vertices and none twice.
  [[nodiscard]] bool is_cycle() const;
};

/// The precoloured path of an extension instance: 0, 1 or 2 vertices.
struct PrecolouredPath {
  std::vector<Vertex> vertices;
  std::vector<Colour> colours;

  [[nodiscard]] std::size_t size() const noexcept { return vertices.size(); }
};

/// Simple plane graph given by a rotation system, with one designated outer
/// face per connected component that has edges. Immutable after construction.
///
/// Face tracing follows the rule next(u->v) = (v, pred_v(u)), so with
/// counter-clockwise rotations every face lies to the left of its darts.
/// Planarity is certified per component by V - E + F = 2.
class PlaneGraph {
 public:
  /// Empty graph.
  PlaneGraph();

  /// Validates and embeds. Each hint is a vertex sequence whose consecutive
  /// pairs are consecutive darts of one face (either direction is accepted).
  /// Components without a hint get their longest face as outer face.
  static PlaneGraph build(std::vector<Vertex> vertices, Rotation rotation,
                          const std::vector<std::vector<Vertex>>& outer_hints = {});

  /// Embeds an already validated rotation; each component's outer face is the
  /// face holding the most darts of the first preference set that touches the
  /// component (falling back to its longest face).
  static PlaneGraph from_rotation(Rotation rotation,
                                  const std::vector<std::set<Dart>>& outer_preferences);

  [[nodiscard]] const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const Rotation& rotation() const noexcept { return rotation_; }
  [[nodiscard]] const std::vector<Vertex>& neighbours(const Vertex& v) const;
  [[nodiscard]] bool has_vertex(const Vertex& v) const;
  [[nodiscard]] bool has_edge(const Vertex& u, const Vertex& v) const;
  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertices_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }
  [[nodiscard]] std::size_t degree(const Vertex& v) const { return neighbours(v).size(); }
  [[nodiscard]] std::vector<Edge> edges() const;

  [[nodiscard]] const std::vector<Face>& faces() const noexcept { return faces_; }
  [[nodiscard]] const Face& face(std::size_t id) const;
  [[nodiscard]] std::size_t face_of(const Dart& d) const;
  /// Faces of the plane drawing, where all components share the outer face.
  [[nodiscard]] std::size_t face_count() const noexcept;

  [[nodiscard]] std::size_t component_count() const noexcept { return component_members_.size(); }
  [[nodiscard]] std::size_t component_of(const Vertex& v) const;
  [[nodiscard]] const std::vector<std::vector<Vertex>>& components() const noexcept {
    return component_members_;
  }

  /// Outer face of each component (nullopt for isolated vertices).
  [[nodiscard]] const std::vector<std::optional<std::size_t>>& component_outer_faces() const noexcept {
    return component_outer_;
  }
  [[nodiscard]] bool is_outer_dart(const Dart& d) const;
  /// True when either orientation of uv lies on an outer face.
  [[nodiscard]] bool is_outer_edge(const Vertex& u, const Vertex& v) const;
  /// Vertices on some outer walk, plus all isolated vertices.
  [[nodiscard]] const std::set<Vertex>& outer_vertices() const noexcept { return outer_vertices_; }
  [[nodiscard]] bool on_outer_boundary(const Vertex& v) const { return outer_vertices_.contains(v); }
  /// Outer walk of the component containing v.
  [[nodiscard]] BoundaryWalk outer_walk_of(const Vertex& v) const;
  /// All outer darts across components.
  [[nodiscard]] std::set<Dart> outer_darts() const;

 private:
  std::vector<Vertex> vertices_;
  Rotation rotation_;
  std::size_t edge_count_ = 0;
  std::vector<Face> faces_;
  std::map<Dart, std::size_t> dart_face_;
  std::map<Vertex, std::size_t> component_;
  std::vector<std::vector<Vertex>> component_members_;
  std::vector<std::optional<std::size_t>> component_outer_;
  std::set<Vertex> outer_vertices_;

  void index();
  void finish_outer();
};

/// Every face of g; each dart appears in exactly one walk, exactly once.
[[nodiscard]] std::vector<Face> trace_faces(const PlaneGraph& g);

/// Outer walk of the first component that has edges (empty if none).
[[nodiscard]] BoundaryWalk outer_walk(const PlaneGraph& g);

/// Articulation points, sorted.
[[nodiscard]] std::vector<Vertex> cut_vertices(const PlaneGraph& g);

/// Edges of g joining non-consecutive vertices of the cycle c.
[[nodiscard]] std::vector<Edge> find_chords(const PlaneGraph& g, const BoundaryWalk& c);

/// Splits at a cut vertex u. The first part is u together with the component of
/// g - u holding the smallest vertex; the second part holds everything else.
[[nodiscard]] std::pair<PlaneGraph, PlaneGraph> split_at_cut_vertex(const PlaneGraph& g, const Vertex& u);

/// Splits along an edge vi vj whose ends are on the outer walk but which is not
/// itself on it. Both parts keep vi vj on their outer walk. The first part is
/// the side holding the smallest vertex other than vi and vj.
[[nodiscard]] std::pair<PlaneGraph, PlaneGraph> split_at_chord(const PlaneGraph& g, const Vertex& vi,
                                                               const Vertex& vj);

/// Deletes a vertex or an edge. Faces merged by the deletion join the outer
/// face when the deleted item touched it.
[[nodiscard]] PlaneGraph remove(const PlaneGraph& g, const Vertex& v);
[[nodiscard]] PlaneGraph remove(const PlaneGraph& g, const Edge& e);

/// Deletes v and makes the face left behind the outer face of every component
/// that touched v, so that all former neighbours of v end up on outer walks.
[[nodiscard]] PlaneGraph remove_exposing(const PlaneGraph& g, const Vertex& v);

[[nodiscard]] PlaneGraph reroot_outer_face(const PlaneGraph& g, std::size_t face_id);

/// All triangles as sorted triples, in lexicographic order.
[[nodiscard]] std::vector<Triangle> enumerate_triangles(const PlaneGraph& g);

/// Subgraph on the given component (or any union of components), keeping the
/// embedding and outer faces.
[[nodiscard]] PlaneGraph component_subgraph(const PlaneGraph& g, const std::vector<Vertex>& members);

/// Groups faces into regions that can reach each other without crossing a wall
/// edge. Returns one region label per face id.
[[nodiscard]] std::vector<std::size_t> face_regions(const PlaneGraph& g, const std::set<Edge>& walls);

/// Keeps the listed edges (and vertices), inheriting cyclic order.
[[nodiscard]] PlaneGraph edge_subgraph(const PlaneGraph& g, const std::set<Vertex>& vertices,
                                       const std::set<Edge>& edges,
                                       const std::vector<std::set<Dart>>& outer_preferences);

}  // namespace sepcol
