#pragma once

// Builders and brute-force oracles shared by the test binaries. The oracles
// deliberately avoid the library's search code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sepcol/assignments.hpp"
#include "sepcol/constructive.hpp"
#include "sepcol/error.hpp"
#include "sepcol/generators.hpp"
#include "sepcol/exact_solver.hpp"
#include "sepcol/plane_graph.hpp"

namespace testkit {

using namespace sepcol;

struct Pt {
  double x;
  double y;
};

/// Plane graph from a straight-line drawing: rotations are the neighbours
/// sorted counter-clockwise by angle.
inline PlaneGraph drawn(const std::map<std::string, Pt>& pts, const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::vector<Vertex>>& outer = {}) {
  std::vector<Vertex> vs;
  Rotation rot;
  for (const auto& [name, p] : pts) {
    vs.emplace_back(name);
    rot[Vertex(name)];
  }
  std::map<std::string, std::vector<std::pair<double, std::string>>> around;
  for (const auto& [a, b] : edges) {
    const Pt pa = pts.at(a), pb = pts.at(b);
    around[a].emplace_back(std::atan2(pb.y - pa.y, pb.x - pa.x), b);
    around[b].emplace_back(std::atan2(pa.y - pb.y, pa.x - pb.x), a);
  }
  for (auto& [name, list] : around) {
    std::sort(list.begin(), list.end());
    for (const auto& [angle, w] : list) rot[Vertex(name)].emplace_back(w);
  }
  return PlaneGraph::build(vs, rot, outer);
}

/// Cycle v0..v{k-1} drawn on a circle counter-clockwise, plus extra chords.
inline PlaneGraph cycle(std::size_t k, const std::vector<std::pair<std::size_t, std::size_t>>& chords = {}) {
  std::map<std::string, Pt> pts;
  std::vector<std::pair<std::string, std::string>> edges;
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < k; ++i) {
    pts["v" + std::to_string(i)] = {std::cos(2 * pi * i / k), std::sin(2 * pi * i / k)};
    edges.emplace_back("v" + std::to_string(i), "v" + std::to_string((i + 1) % k));
  }
  for (auto [a, b] : chords) edges.emplace_back("v" + std::to_string(a), "v" + std::to_string(b));
  std::vector<Vertex> outer;
  for (std::size_t i = 0; i < k; ++i) outer.emplace_back("v" + std::to_string(i));
  return drawn(pts, edges, {outer});
}

/// Wheel: rim r0..r{k-1} on a circle, hub "h" at the centre.
inline PlaneGraph wheel(std::size_t k) {
  std::map<std::string, Pt> pts{{"h", {0, 0}}};
  std::vector<std::pair<std::string, std::string>> edges;
  const double pi = std::acos(-1.0);
  std::vector<Vertex> outer;
  for (std::size_t i = 0; i < k; ++i) {
    const std::string r = "r" + std::to_string(i);
    pts[r] = {std::cos(2 * pi * i / k), std::sin(2 * pi * i / k)};
    edges.emplace_back(r, "r" + std::to_string((i + 1) % k));
    edges.emplace_back("h", r);
    outer.emplace_back(r);
  }
  return drawn(pts, edges, {outer});
}

inline PlaneGraph k4() {
  return drawn({{"a", {0, 0}}, {"b", {4, 0}}, {"c", {2, 3}}, {"d", {2, 1}}},
               {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "d"}, {"b", "d"}, {"c", "d"}},
               {{"a"_v, "b"_v, "c"_v}});
}

inline ColourSet cs(std::initializer_list<const char*> names) {
  ColourSet out;
  for (const char* n : names) out.emplace(n);
  return out;
}

/// Connected components by repeated BFS over the rotation.
inline std::size_t count_components(const PlaneGraph& g, const std::set<Vertex>& skip = {}) {
  std::set<Vertex> seen = skip;
  std::size_t n = 0;
  for (const auto& v : g.vertices()) {
    if (seen.contains(v)) continue;
    ++n;
    std::vector<Vertex> stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& w : g.neighbours(x))
        if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return n;
}

/// Articulation points by deletion and recount.
inline std::vector<Vertex> brute_cut_vertices(const PlaneGraph& g) {
  std::vector<Vertex> out;
  const std::size_t base = count_components(g);
  for (const auto& v : g.vertices()) {
    if (count_components(g, {v}) > base) out.push_back(v);
  }
  return out;
}

inline std::vector<Triangle> brute_triangles(const PlaneGraph& g) {
  std::vector<Triangle> out;
  const auto& vs = g.vertices();
  std::vector<Vertex> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      for (std::size_t k = j + 1; k < sorted.size(); ++k)
        if (g.has_edge(sorted[i], sorted[j]) && g.has_edge(sorted[j], sorted[k]) && g.has_edge(sorted[i], sorted[k]))
          out.push_back({sorted[i], sorted[j], sorted[k]});
  return out;
}

/// Odometer over the full product of lists; `proper` decides each leaf.
inline std::uint64_t brute_count(const PlaneGraph& g, const ListAssignment& lists,
                                 const std::function<bool(const Colouring&)>& proper, std::uint64_t stop_at = 0) {
  const auto& vs = g.vertices();
  std::vector<std::vector<Colour>> dom;
  for (const auto& v : vs) dom.emplace_back(lists.at(v).begin(), lists.at(v).end());
  for (const auto& d : dom)
    if (d.empty()) return 0;
  std::vector<std::size_t> idx(vs.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    Colouring c;
    for (std::size_t i = 0; i < vs.size(); ++i) c[vs[i]] = dom[i][idx[i]];
    if (proper(c)) {
      ++count;
      if (stop_at != 0 && count >= stop_at) return count;
    }
    std::size_t i = 0;
    while (i < vs.size() && ++idx[i] == dom[i].size()) idx[i++] = 0;
    if (i == vs.size()) return count;
  }
}

inline bool list_proper(const PlaneGraph& g, const Colouring& c) {
  for (const auto& v : g.vertices())
    for (const auto& w : g.neighbours(v))
      if (c.at(v) == c.at(w)) return false;
  return true;
}

inline bool corr_proper(const PlaneGraph& g, const CorrespondenceAssignment& a, const Colouring& c) {
  for (const auto& [e, pairs] : a.matchings())
    if (g.has_edge(e.u, e.v) && pairs.contains({c.at(e.u), c.at(e.v)})) return false;
  return true;
}

inline bool brute_list_colourable(const PlaneGraph& g, const ListAssignment& lists) {
  return brute_count(g, lists, [&](const Colouring& c) { return list_proper(g, c); }, 1) > 0;
}

/// Random lists of 1..max_size colours from a palette of p.
inline ListAssignment small_lists(const PlaneGraph& g, std::size_t max_size, std::size_t palette, std::mt19937_64& rng) {
  ListAssignment out;
  std::vector<Colour> all;
  for (std::size_t i = 1; i <= palette; ++i) all.emplace_back(std::to_string(i));
  for (const auto& v : g.vertices()) {
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
    out.set(v, ColourSet(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size)));
  }
  return out;
}

/// V - E + F with F counted from traced faces, isolated vertices and the
/// shared outer face.
inline long euler_characteristic(const PlaneGraph& g) {
  return static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) + static_cast<long>(g.face_count());
}

/// Random instance meeting the extension hypotheses: (4,2) lists without
/// offensive triangles, outer lists cut to three colours, and a precoloured
/// path of 0, 1 or 2 outer vertices.
inline ExtensionInstance random_extension_instance(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PlaneGraph g = gen_random_plane(n, seed, PlaneGenOptions{false, seed % 4});
  ListAssignment lists = gen_random_assignment(g, {4, 2}, 12, seed, AssignmentGenOptions{true});
  for (const auto& v : g.outer_vertices()) {
    std::vector<Colour> list(lists.at(v).begin(), lists.at(v).end());
    std::shuffle(list.begin(), list.end(), rng);
    lists.set(v, ColourSet(list.begin(), list.begin() + 3));
  }
  PrecolouredPath path;
  const auto darts = g.outer_darts();
  const std::size_t kind = seed % 3;
  auto pick = [&](const Vertex& v, const std::optional<Colour>& avoid) {
    std::vector<Colour> options;
    for (const auto& c : lists.at(v))
      if (!avoid || c != *avoid) options.push_back(c);
    return options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
  };
  if (kind == 2 && !darts.empty()) {
    auto it = darts.begin();
    std::advance(it, std::uniform_int_distribution<std::size_t>(0, darts.size() - 1)(rng));
    path.vertices = {it->from, it->to};
    path.colours.push_back(pick(it->from, std::nullopt));
    path.colours.push_back(pick(it->to, path.colours[0]));
  } else if (kind >= 1) {
    std::vector<Vertex> outer(g.outer_vertices().begin(), g.outer_vertices().end());
    const Vertex v = outer[std::uniform_int_distribution<std::size_t>(0, outer.size() - 1)(rng)];
    path.vertices = {v};
    path.colours = {pick(v, std::nullopt)};
  }
  return ExtensionInstance{std::move(g), std::move(path), std::move(lists)};
}

/// Lists with the path pinned, for cross-checking with the exact solver.
inline ListAssignment pinned_lists(const ExtensionInstance& inst) {
  ListAssignment out = inst.lists;
  for (std::size_t i = 0; i < inst.path.size(); ++i) out.set(inst.path.vertices[i], {inst.path.colours[i]});
  return out;
}

/// Offensive-free (4,2) lists, then fresh lists on the clique vertices drawn
/// from a small palette so that offensive triangles through the clique appear.
/// Every offensive triangle meets the clique because the other lists are
/// untouched. Returns false when no admissible lists were found.
inline bool lists_around_clique(const PlaneGraph& g, const std::vector<Vertex>& clique, std::uint64_t seed,
                                ListAssignment& lists) {
  lists = gen_random_assignment(g, {4, 2}, 12, seed, AssignmentGenOptions{true});
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Colour> palette;
  for (int i = 1; i <= 12; ++i) palette.emplace_back(std::to_string(i));
  for (const auto& h : clique) {
    bool placed = false;
    for (int attempt = 0; attempt < 500 && !placed; ++attempt) {
      // Bias towards colours already used by a neighbour to provoke offensive triangles.
      std::vector<Colour> pool;
      for (const auto& w : g.neighbours(h))
        for (const auto& c : lists.at(w)) pool.push_back(c);
      std::shuffle(pool.begin(), pool.end(), rng);
      ColourSet list;
      for (const auto& c : pool) {
        if (list.size() == 2) break;
        list.insert(c);
      }
      std::shuffle(palette.begin(), palette.end(), rng);
      for (const auto& c : palette) {
        if (list.size() == 4) break;
        list.insert(c);
      }
      bool ok = true;
      for (const auto& w : g.neighbours(h))
        if (shared_colours(list, lists.at(w)) > 2) ok = false;
      if (ok) {
        lists.set(h, list);
        placed = true;
      }
    }
    if (!placed) return false;
  }
  return true;
}

/// All cliques of size 1 to 4, each sorted.
inline std::vector<std::vector<Vertex>> all_cliques(const PlaneGraph& g) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& v : g.vertices()) out.push_back({v});
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  for (const auto& t : brute_triangles(g)) {
    out.push_back({t[0], t[1], t[2]});
    for (const auto& w : g.vertices())
      if (t[2] < w && g.has_edge(w, t[0]) && g.has_edge(w, t[1]) && g.has_edge(w, t[2]))
        out.push_back({t[0], t[1], t[2], w});
  }
  return out;
}

/// Runs `fn` and reports the ErrorKind it threw, or nullopt.
template <class F>
std::optional<ErrorKind> thrown_kind(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace testkit
