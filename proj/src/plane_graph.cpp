#include "sepcol/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "sepcol/error.hpp"

namespace sepcol {

namespace {

struct Traced {
  std::vector<Face> faces;
  std::map<Dart, std::size_t> dart_face;
};

Traced trace(const Rotation& rotation) {
  std::map<Dart, std::size_t> position;
  for (const auto& [v, nbrs] : rotation)
    for (std::size_t i = 0; i < nbrs.size(); ++i) position[{v, nbrs[i]}] = i;

  Traced out;
  for (const auto& [v, nbrs] : rotation) {
    for (const auto& w : nbrs) {
      Dart start{v, w};
      if (out.dart_face.contains(start)) continue;
      Face face;
      face.id = out.faces.size();
      Dart cur = start;
      do {
        out.dart_face[cur] = face.id;
        face.walk.push_back(cur);
        const auto& around = rotation.at(cur.to);
        std::size_t i = position.at({cur.to, cur.from});
        std::size_t j = (i + around.size() - 1) % around.size();
        cur = Dart{cur.to, around[j]};
      } while (cur != start);
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

std::vector<std::size_t> regions_of(const Traced& t, const std::set<Edge>& walls) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(t.faces.size(), unset);
  std::size_t next = 0;
  for (std::size_t f = 0; f < t.faces.size(); ++f) {
    if (label[f] != unset) continue;
    std::deque<std::size_t> queue{f};
    label[f] = next;
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (const auto& d : t.faces[cur].walk) {
        if (walls.contains(Edge(d.from, d.to))) continue;
        std::size_t across = t.dart_face.at(d.reversed());
        if (label[across] == unset) {
          label[across] = next;
          queue.push_back(across);
        }
      }
    }
    ++next;
  }
  return label;
}

std::set<Dart> darts_of_faces_touching(const PlaneGraph& g, const Vertex& v) {
  std::set<Dart> out;
  for (const auto& w : g.neighbours(v)) {
    for (const Dart& d : {Dart{v, w}, Dart{w, v}}) {
      const auto& walk = g.face(g.face_of(d)).walk;
      out.insert(walk.begin(), walk.end());
    }
  }
  return out;
}

Rotation filtered(const Rotation& rotation, const std::function<bool(const Vertex&)>& keep_vertex,
                  const std::function<bool(const Vertex&, const Vertex&)>& keep_edge) {
  Rotation out;
  for (const auto& [v, nbrs] : rotation) {
    if (!keep_vertex(v)) continue;
    auto& dst = out[v];
    for (const auto& w : nbrs)
      if (keep_vertex(w) && keep_edge(v, w)) dst.push_back(w);
  }
  return out;
}

Vertex fresh_vertex(const PlaneGraph& g) {
  std::string name = "~aux";
  while (g.has_vertex(Vertex(name))) name += '~';
  return Vertex(name);
}

}  // namespace

std::vector<Vertex> Face::vertices() const {
  std::vector<Vertex> out;
  out.reserve(walk.size());
  for (const auto& d : walk) out.push_back(d.from);
  return out;
}

bool Face::contains(const Vertex& v) const {
  return std::any_of(walk.begin(), walk.end(), [&](const Dart& d) { return d.from == v; });
}

std::vector<Vertex> BoundaryWalk::vertices() const {
  std::vector<Vertex> out;
  out.reserve(walk.size());
  for (const auto& d : walk) out.push_back(d.from);
  return out;
}

bool BoundaryWalk::is_cycle() const {
  auto vs = vertices();
  if (vs.size() < 3) return false;
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

PlaneGraph::PlaneGraph() { index(); }

void PlaneGraph::index() {
  vertices_.clear();
  edge_count_ = 0;
  for (const auto& [v, nbrs] : rotation_) {
    vertices_.push_back(v);
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;

  auto traced = trace(rotation_);
  faces_ = std::move(traced.faces);
  dart_face_ = std::move(traced.dart_face);

  component_.clear();
  component_members_.clear();
  for (const auto& v : vertices_) {
    if (component_.contains(v)) continue;
    std::size_t id = component_members_.size();
    std::vector<Vertex> members;
    std::deque<Vertex> queue{v};
    component_[v] = id;
    while (!queue.empty()) {
      Vertex cur = queue.front();
      queue.pop_front();
      members.push_back(cur);
      for (const auto& w : rotation_.at(cur)) {
        if (!component_.contains(w)) {
          component_[w] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    component_members_.push_back(std::move(members));
  }
  component_outer_.assign(component_members_.size(), std::nullopt);
}

void PlaneGraph::finish_outer() {
  outer_vertices_.clear();
  for (std::size_t c = 0; c < component_members_.size(); ++c) {
    if (component_outer_[c]) {
      for (const auto& d : faces_[*component_outer_[c]].walk) outer_vertices_.insert(d.from);
    } else {
      outer_vertices_.insert(component_members_[c].begin(), component_members_[c].end());
    }
  }
}

PlaneGraph PlaneGraph::from_rotation(Rotation rotation, const std::vector<std::set<Dart>>& outer_preferences) {
  PlaneGraph g;
  g.rotation_ = std::move(rotation);
  g.index();

  std::vector<std::vector<std::size_t>> faces_by_component(g.component_count());
  for (const auto& f : g.faces_) faces_by_component[g.component_.at(f.walk.front().from)].push_back(f.id);

  for (const auto& pref : outer_preferences) {
    std::map<std::size_t, std::map<std::size_t, std::size_t>> counts;  // component -> face -> hits
    for (const auto& d : pref) {
      auto it = g.dart_face_.find(d);
      if (it == g.dart_face_.end()) continue;
      std::size_t c = g.component_.at(d.from);
      if (!g.component_outer_[c]) ++counts[c][it->second];
    }
    for (const auto& [c, per_face] : counts) {
      auto best = std::max_element(per_face.begin(), per_face.end(),
                                   [](const auto& a, const auto& b) { return a.second < b.second; });
      g.component_outer_[c] = best->first;
    }
  }
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    if (g.component_outer_[c] || faces_by_component[c].empty()) continue;
    std::size_t best = faces_by_component[c].front();
    for (std::size_t f : faces_by_component[c])
      if (g.faces_[f].walk.size() > g.faces_[best].walk.size()) best = f;
    g.component_outer_[c] = best;
  }
  g.finish_outer();
  return g;
}

PlaneGraph PlaneGraph::build(std::vector<Vertex> vertices, Rotation rotation,
                             const std::vector<std::vector<Vertex>>& outer_hints) {
  std::set<Vertex> known;
  for (const auto& v : vertices) {
    if (!known.insert(v).second) throw Error(ErrorKind::BadParameters, "vertex listed twice: " + v.str());
  }
  for (const auto& [v, nbrs] : rotation) {
    if (!known.contains(v)) throw Error(ErrorKind::UnknownVertex, "rotation for unknown vertex " + v.str());
    std::set<Vertex> seen;
    for (const auto& w : nbrs) {
      if (!known.contains(w)) throw Error(ErrorKind::UnknownVertex, "unknown neighbour " + w.str() + " of " + v.str());
      if (w == v) throw Error(ErrorKind::SelfLoop, "loop at " + v.str());
      if (!seen.insert(w).second)
        throw Error(ErrorKind::DuplicateNeighbour, w.str() + " appears twice around " + v.str());
    }
  }
  for (const auto& v : vertices) rotation[v];
  for (const auto& [v, nbrs] : rotation) {
    for (const auto& w : nbrs) {
      const auto& back = rotation.at(w);
      if (std::find(back.begin(), back.end(), v) == back.end())
        throw Error(ErrorKind::AsymmetricRotation, v.str() + " lists " + w.str() + " but not conversely");
    }
  }

  PlaneGraph g;
  g.rotation_ = std::move(rotation);
  g.index();

  // Euler relation per component; an isolated vertex counts as one face.
  const std::size_t comps = g.component_count();
  std::vector<long> v_count(comps, 0), degree_sum(comps, 0), f_count(comps, 0);
  for (const auto& v : g.vertices_) {
    auto c = g.component_.at(v);
    ++v_count[c];
    degree_sum[c] += static_cast<long>(g.rotation_.at(v).size());
  }
  for (const auto& f : g.faces_) ++f_count[g.component_.at(f.walk.front().from)];
  for (std::size_t c = 0; c < comps; ++c) {
    long faces = v_count[c] == 1 ? 1 : f_count[c];
    long chi = v_count[c] - degree_sum[c] / 2 + faces;
    if (chi != 2) {
      std::ostringstream msg;
      msg << "component of " << g.component_members_[c].front() << " has V-E+F = " << chi << " (expected 2)";
      throw Error(ErrorKind::NotPlanarEmbedding, msg.str());
    }
  }

  for (const auto& hint : outer_hints) {
    if (hint.empty()) continue;
    if (!g.has_vertex(hint.front())) throw Error(ErrorKind::UnknownOuterFace, "hint starts at unknown vertex");
    std::size_t c = g.component_.at(hint.front());
    if (g.component_outer_[c]) throw Error(ErrorKind::UnknownOuterFace, "two hints for one component");
    if (hint.size() == 1) {
      if (!g.rotation_.at(hint.front()).empty())
        throw Error(ErrorKind::UnknownOuterFace, "single-vertex hint is ambiguous at " + hint.front().str());
      continue;
    }
    auto matches = [&](const std::vector<Vertex>& seq) -> std::optional<std::size_t> {
      auto it = g.dart_face_.find(Dart{seq[0], seq[1]});
      if (it == g.dart_face_.end()) return std::nullopt;
      const auto& walk = g.faces_[it->second].walk;
      auto start = static_cast<std::size_t>(
          std::find(walk.begin(), walk.end(), Dart{seq[0], seq[1]}) - walk.begin());
      for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
        if (walk[(start + k) % walk.size()] != Dart{seq[k], seq[k + 1]}) return std::nullopt;
      }
      return it->second;
    };
    auto face = matches(hint);
    if (!face) {
      std::vector<Vertex> reversed(hint.rbegin(), hint.rend());
      face = matches(reversed);
    }
    if (!face) throw Error(ErrorKind::UnknownOuterFace, "hint starting at " + hint.front().str() + " is not a face walk");
    g.component_outer_[c] = *face;
  }
  std::vector<std::set<Dart>> prefs;
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    if (g.component_outer_[c]) {
      const auto& walk = g.faces_[*g.component_outer_[c]].walk;
      prefs.emplace_back(walk.begin(), walk.end());
    }
  }
  return from_rotation(std::move(g.rotation_), prefs);
}

const std::vector<Vertex>& PlaneGraph::neighbours(const Vertex& v) const {
  auto it = rotation_.find(v);
  if (it == rotation_.end()) throw Error(ErrorKind::MissingItem, "no vertex " + v.str());
  return it->second;
}

bool PlaneGraph::has_vertex(const Vertex& v) const { return rotation_.contains(v); }

bool PlaneGraph::has_edge(const Vertex& u, const Vertex& v) const { return dart_face_.contains(Dart{u, v}); }

std::vector<Edge> PlaneGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (const auto& [v, nbrs] : rotation_)
    for (const auto& w : nbrs)
      if (v < w) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

const Face& PlaneGraph::face(std::size_t id) const {
  if (id >= faces_.size()) throw Error(ErrorKind::UnknownFace, "face id out of range");
  return faces_[id];
}

std::size_t PlaneGraph::face_of(const Dart& d) const {
  auto it = dart_face_.find(d);
  if (it == dart_face_.end()) throw Error(ErrorKind::MissingItem, "no dart " + d.from.str() + "->" + d.to.str());
  return it->second;
}

std::size_t PlaneGraph::face_count() const noexcept {
  if (component_members_.empty()) return 1;
  std::size_t isolated = 0;
  for (const auto& m : component_members_)
    if (m.size() == 1) ++isolated;
  return faces_.size() + isolated - (component_members_.size() - 1);
}

std::size_t PlaneGraph::component_of(const Vertex& v) const {
  auto it = component_.find(v);
  if (it == component_.end()) throw Error(ErrorKind::MissingItem, "no vertex " + v.str());
  return it->second;
}

bool PlaneGraph::is_outer_dart(const Dart& d) const {
  auto it = dart_face_.find(d);
  if (it == dart_face_.end()) return false;
  return component_outer_[component_.at(d.from)] == it->second;
}

bool PlaneGraph::is_outer_edge(const Vertex& u, const Vertex& v) const {
  return is_outer_dart({u, v}) || is_outer_dart({v, u});
}

BoundaryWalk PlaneGraph::outer_walk_of(const Vertex& v) const {
  auto f = component_outer_[component_of(v)];
  if (!f) return {};
  return BoundaryWalk{faces_[*f].walk};
}

std::set<Dart> PlaneGraph::outer_darts() const {
  std::set<Dart> out;
  for (const auto& f : component_outer_)
    if (f) out.insert(faces_[*f].walk.begin(), faces_[*f].walk.end());
  return out;
}

std::vector<Face> trace_faces(const PlaneGraph& g) { return g.faces(); }

BoundaryWalk outer_walk(const PlaneGraph& g) {
  for (const auto& f : g.component_outer_faces())
    if (f) return BoundaryWalk{g.face(*f).walk};
  return {};
}

std::vector<Vertex> cut_vertices(const PlaneGraph& g) {
  const auto& vs = g.vertices();
  std::map<Vertex, std::size_t> idx;
  for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = i;
  std::vector<std::vector<std::size_t>> adj(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (const auto& w : g.neighbours(vs[i])) adj[i].push_back(idx.at(w));

  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> depth(vs.size(), unset), low(vs.size(), 0);
  std::vector<bool> is_cut(vs.size(), false);
  std::function<void(std::size_t, std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t parent,
                                                                       std::size_t d) {
    depth[v] = low[v] = d;
    std::size_t children = 0;
    for (std::size_t w : adj[v]) {
      if (w == parent) continue;
      if (depth[w] != unset) {
        low[v] = std::min(low[v], depth[w]);
        continue;
      }
      ++children;
      dfs(w, v, d + 1);
      low[v] = std::min(low[v], low[w]);
      if (parent != unset && low[w] >= depth[v]) is_cut[v] = true;
    }
    if (parent == unset && children > 1) is_cut[v] = true;
  };
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (depth[i] == unset) dfs(i, unset, 0);

  std::vector<Vertex> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (is_cut[i]) out.push_back(vs[i]);
  return out;
}

std::vector<Edge> find_chords(const PlaneGraph& g, const BoundaryWalk& c) {
  if (!c.is_cycle()) throw Error(ErrorKind::WalkNotCycle, "boundary walk is not a cycle");
  auto order = c.vertices();
  std::map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  const std::size_t k = order.size();
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    auto iu = pos.find(e.u), iv = pos.find(e.v);
    if (iu == pos.end() || iv == pos.end()) continue;
    std::size_t gap = (iu->second + k - iv->second) % k;
    if (gap != 1 && gap != k - 1) out.push_back(e);
  }
  return out;
}

PlaneGraph edge_subgraph(const PlaneGraph& g, const std::set<Vertex>& vertices, const std::set<Edge>& edges,
                         const std::vector<std::set<Dart>>& outer_preferences) {
  auto rot = filtered(
      g.rotation(), [&](const Vertex& v) { return vertices.contains(v); },
      [&](const Vertex& a, const Vertex& b) { return edges.contains(Edge(a, b)); });
  return PlaneGraph::from_rotation(std::move(rot), outer_preferences);
}

PlaneGraph component_subgraph(const PlaneGraph& g, const std::vector<Vertex>& members) {
  std::set<Vertex> keep(members.begin(), members.end());
  auto rot = filtered(
      g.rotation(), [&](const Vertex& v) { return keep.contains(v); },
      [](const Vertex&, const Vertex&) { return true; });
  return PlaneGraph::from_rotation(std::move(rot), {g.outer_darts()});
}

std::pair<PlaneGraph, PlaneGraph> split_at_cut_vertex(const PlaneGraph& g, const Vertex& u) {
  auto cuts = cut_vertices(g);
  if (!std::binary_search(cuts.begin(), cuts.end(), u))
    throw Error(ErrorKind::NotACutVertex, u.str() + " is not a cut vertex");

  // Component of g - u holding the smallest vertex of u's component.
  std::set<Vertex> first{u};
  const auto& members = g.components()[g.component_of(u)];
  Vertex seed = members.front() == u ? members[1] : members.front();
  std::deque<Vertex> queue{seed};
  first.insert(seed);
  while (!queue.empty()) {
    Vertex cur = queue.front();
    queue.pop_front();
    for (const auto& w : g.neighbours(cur)) {
      if (w != u && first.insert(w).second) queue.push_back(w);
    }
  }
  std::set<Vertex> second{u};
  for (const auto& v : g.vertices())
    if (!first.contains(v)) second.insert(v);

  auto part = [&](const std::set<Vertex>& side) {
    // Faces of g that straddle both sides become the outer face when the part
    // carries none of g's outer walk.
    std::set<Dart> straddle;
    for (const auto& f : g.faces()) {
      bool inside = false, outside = false;
      for (const auto& d : f.walk) {
        bool in = side.contains(d.from) && side.contains(d.to);
        (in ? inside : outside) = true;
      }
      if (inside && outside)
        for (const auto& d : f.walk)
          if (side.contains(d.from) && side.contains(d.to)) straddle.insert(d);
    }
    auto rot = filtered(
        g.rotation(), [&](const Vertex& v) { return side.contains(v); },
        [](const Vertex&, const Vertex&) { return true; });
    return PlaneGraph::from_rotation(std::move(rot), {g.outer_darts(), straddle});
  };
  return {part(first), part(second)};
}

std::pair<PlaneGraph, PlaneGraph> split_at_chord(const PlaneGraph& g, const Vertex& vi, const Vertex& vj) {
  if (!g.has_edge(vi, vj)) throw Error(ErrorKind::NotAChord, vi.str() + vj.str() + " is not an edge");
  if (g.is_outer_edge(vi, vj)) throw Error(ErrorKind::NotAChord, "edge lies on the outer walk");
  if (!g.on_outer_boundary(vi) || !g.on_outer_boundary(vj))
    throw Error(ErrorKind::NotAChord, "an endpoint is not on the outer walk");

  // Close the chord into a Jordan curve through the outer face with an
  // auxiliary vertex z joined to a corner of the outer face at each end.
  const BoundaryWalk walk = g.outer_walk_of(vi);
  Rotation aug = g.rotation();
  const Vertex z = fresh_vertex(g);
  for (const Vertex& end : {vi, vj}) {
    auto entry = std::find_if(walk.walk.begin(), walk.walk.end(), [&](const Dart& d) { return d.to == end; });
    auto& around = aug.at(end);
    around.insert(std::find(around.begin(), around.end(), entry->from), z);
  }
  aug[z] = {vi, vj};
  auto traced = trace(aug);
  if (traced.faces.size() != g.faces().size() + 1)
    throw Error(ErrorKind::InternalContradiction, "auxiliary path did not split the outer face");

  const std::set<Edge> walls{Edge(vi, vj), Edge(vi, z), Edge(vj, z)};
  auto label = regions_of(traced, walls);
  std::size_t side_a = label[traced.dart_face.at(Dart{vi, vj})];
  std::size_t side_b = label[traced.dart_face.at(Dart{vj, vi})];
  if (side_a == side_b) throw Error(ErrorKind::NotAChord, "edge does not separate the graph");

  std::set<Vertex> verts_a, verts_b;
  std::set<Edge> edges_a, edges_b;
  for (const auto& f : traced.faces) {
    if (label[f.id] != side_a && label[f.id] != side_b) continue;
    auto& vs = label[f.id] == side_a ? verts_a : verts_b;
    auto& es = label[f.id] == side_a ? edges_a : edges_b;
    for (const auto& d : f.walk) {
      if (d.from == z || d.to == z) continue;
      es.emplace(d.from, d.to);
      vs.insert(d.from);
      vs.insert(d.to);
    }
  }
  auto smallest_other = [&](const std::set<Vertex>& vs) {
    for (const auto& v : vs)
      if (v != vi && v != vj) return v;
    return Vertex();
  };
  if (smallest_other(verts_b) < smallest_other(verts_a)) {
    std::swap(verts_a, verts_b);
    std::swap(edges_a, edges_b);
  }
  // Components not touched by the chord ride along in the second part.
  const auto component = g.component_of(vi);
  for (const auto& v : g.vertices())
    if (g.component_of(v) != component) verts_b.insert(v);
  for (const auto& e : g.edges())
    if (g.component_of(e.u) != component) edges_b.insert(e);

  const std::vector<std::set<Dart>> prefs{g.outer_darts(), {Dart{vi, vj}, Dart{vj, vi}}};
  return {edge_subgraph(g, verts_a, edges_a, prefs), edge_subgraph(g, verts_b, edges_b, prefs)};
}

PlaneGraph remove(const PlaneGraph& g, const Vertex& v) {
  if (!g.has_vertex(v)) throw Error(ErrorKind::MissingItem, "no vertex " + v.str());
  auto hole = darts_of_faces_touching(g, v);
  auto rot = filtered(
      g.rotation(), [&](const Vertex& x) { return x != v; }, [](const Vertex&, const Vertex&) { return true; });
  return PlaneGraph::from_rotation(std::move(rot), {g.outer_darts(), hole});
}

PlaneGraph remove(const PlaneGraph& g, const Edge& e) {
  if (!g.has_edge(e.u, e.v)) throw Error(ErrorKind::MissingItem, "no edge " + e.u.str() + "-" + e.v.str());
  std::set<Dart> hole;
  for (const Dart& d : {Dart{e.u, e.v}, Dart{e.v, e.u}}) {
    const auto& walk = g.face(g.face_of(d)).walk;
    hole.insert(walk.begin(), walk.end());
  }
  auto rot = filtered(
      g.rotation(), [](const Vertex&) { return true; },
      [&](const Vertex& a, const Vertex& b) { return Edge(a, b) != e; });
  return PlaneGraph::from_rotation(std::move(rot), {g.outer_darts(), hole});
}

PlaneGraph remove_exposing(const PlaneGraph& g, const Vertex& v) {
  if (!g.has_vertex(v)) throw Error(ErrorKind::MissingItem, "no vertex " + v.str());
  auto hole = darts_of_faces_touching(g, v);
  auto rot = filtered(
      g.rotation(), [&](const Vertex& x) { return x != v; }, [](const Vertex&, const Vertex&) { return true; });
  return PlaneGraph::from_rotation(std::move(rot), {hole, g.outer_darts()});
}

PlaneGraph reroot_outer_face(const PlaneGraph& g, std::size_t face_id) {
  const auto& walk = g.face(face_id).walk;
  return PlaneGraph::from_rotation(g.rotation(), {std::set<Dart>(walk.begin(), walk.end()), g.outer_darts()});
}

std::vector<Triangle> enumerate_triangles(const PlaneGraph& g) {
  std::vector<Triangle> out;
  for (const auto& e : g.edges()) {
    for (const auto& w : g.neighbours(e.u)) {
      if (e.v < w && g.has_edge(e.v, w)) out.push_back({e.u, e.v, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> face_regions(const PlaneGraph& g, const std::set<Edge>& walls) {
  Traced t;
  t.faces = g.faces();
  for (const auto& f : t.faces)
    for (const auto& d : f.walk) t.dart_face[d] = f.id;
  return regions_of(t, walls);
}

}  // namespace sepcol
