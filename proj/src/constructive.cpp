#include "sepcol/constructive.hpp"

#include <algorithm>
#include <functional>

#include "sepcol/error.hpp"

namespace sepcol {

ExtensionStats& ExtensionStats::operator+=(const ExtensionStats& o) {
  calls += o.calls;
  max_depth = std::max(max_depth, o.max_depth);
  base_cases += o.base_cases;
  component_splits += o.component_splits;
  pins_added += o.pins_added;
  cut_vertex_splits += o.cut_vertex_splits;
  chord_splits += o.chord_splits;
  edge_drops += o.edge_drops;
  v2_reductions += o.v2_reductions;
  v3_reductions += o.v3_reductions;
  pair_reductions += o.pair_reductions;
  trimmed_colours += o.trimmed_colours;
  return *this;
}

namespace {

constexpr std::size_t kBaseCaseSize = 4;

ListAssignment lists_on(const PlaneGraph& g, const ListAssignment& lists) {
  ListAssignment out;
  for (const auto& v : g.vertices()) out.set(v, lists.at(v));
  return out;
}

std::vector<Vertex> path_within(const PlaneGraph& g, const std::vector<Vertex>& path) {
  std::vector<Vertex> out;
  for (const auto& p : path)
    if (g.has_vertex(p)) out.push_back(p);
  return out;
}

bool holds_all(const PlaneGraph& g, const std::vector<Vertex>& path) {
  return std::all_of(path.begin(), path.end(), [&](const Vertex& v) { return g.has_vertex(v); });
}

void merge_into(Colouring& dst, const Colouring& src) {
  for (const auto& [v, c] : src) {
    auto [it, fresh] = dst.emplace(v, c);
    if (!fresh && it->second != c)
      throw Error(ErrorKind::InternalContradiction, "parts disagree on the colour of " + v.str());
  }
}

std::optional<std::string> violation(const PlaneGraph& g, const std::vector<Vertex>& path,
                                     const std::vector<Colour>& colours, const ListAssignment& lists) {
  for (const auto& v : g.vertices())
    if (!lists.covers(v)) return "no list for " + v.str();
  if (path.size() > 2) return "precoloured path has more than two vertices";
  if (colours.size() != path.size()) return "precoloured path and its colours differ in length";
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto& p = path[i];
    if (!g.has_vertex(p)) return "precoloured vertex " + p.str() + " is not in the graph";
    if (!lists.at(p).contains(colours[i])) return "colour " + colours[i].str() + " is not in the list of " + p.str();
    if (!g.on_outer_boundary(p)) return "precoloured vertex " + p.str() + " is not on the outer walk";
  }
  if (path.size() == 2) {
    if (path[0] == path[1]) return "precoloured path repeats " + path[0].str();
    if (!g.has_edge(path[0], path[1])) return "precoloured vertices are not adjacent";
    if (!g.is_outer_edge(path[0], path[1])) return "precoloured edge is not on the outer walk";
    if (colours[0] == colours[1]) return "precoloured vertices share a colour";
  }
  for (const auto& v : g.vertices()) {
    if (std::find(path.begin(), path.end(), v) != path.end()) continue;
    const std::size_t need = g.on_outer_boundary(v) ? 3 : 4;
    if (lists.at(v).size() < need)
      return "list of " + v.str() + " has " + std::to_string(lists.at(v).size()) + " colours, needs " +
             std::to_string(need);
  }
  for (const auto& e : g.edges()) {
    if (shared_colours(lists.at(e.u), lists.at(e.v)) > 2)
      return "lists of " + e.u.str() + " and " + e.v.str() + " share more than two colours";
  }
  auto bad = offensive_triangles(g, lists);
  if (!bad.empty()) return "offensive triangle " + bad[0][0].str() + bad[0][1].str() + bad[0][2].str();
  return std::nullopt;
}

class Extender {
 public:
  explicit Extender(ExtensionStats& stats) : stats_(stats) {}

  // Path vertices carry singleton lists, which are their colours.
  Colouring run(const PlaneGraph& g, ListAssignment lists, std::vector<Vertex> path, std::size_t depth) {
    ++stats_.calls;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    std::vector<Colour> colours;
    for (const auto& p : path) {
      if (!lists.covers(p) || lists.at(p).size() != 1)
        throw Error(ErrorKind::InternalContradiction, "precoloured vertex " + p.str() + " is not pinned");
      colours.push_back(*lists.at(p).begin());
    }
    if (auto why = violation(g, path, colours, lists)) throw Error(ErrorKind::InternalContradiction, *why);

    if (g.vertex_count() <= kBaseCaseSize) return base_case(g, lists);
    if (g.component_count() > 1) return by_component(g, lists, path, depth);

    if (path.empty()) {
      Vertex w = *g.outer_vertices().begin();
      lists.set(w, {*lists.at(w).begin()});
      path.push_back(w);
      ++stats_.pins_added;
    }
    if (path.size() == 1) {
      const Vertex& p = path[0];
      const Colour cp = *lists.at(p).begin();
      std::optional<Vertex> q;
      for (const auto& d : g.outer_walk_of(p).walk) {
        if (d.from == p && (!q || d.to < *q)) q = d.to;
        if (d.to == p && (!q || d.from < *q)) q = d.from;
      }
      if (!q) throw Error(ErrorKind::InternalContradiction, p.str() + " has no neighbour on the outer walk");
      ColourSet options = lists.at(*q);
      options.erase(cp);
      if (options.empty()) throw Error(ErrorKind::InternalContradiction, "no colour left for " + q->str());
      lists.set(*q, {*options.begin()});
      path.push_back(*q);
      ++stats_.pins_added;
    }

    if (auto cuts = cut_vertices(g); !cuts.empty()) return at_cut_vertex(g, lists, path, cuts.front(), depth);

    BoundaryWalk walk = outer_walk(g);
    if (!walk.is_cycle()) throw Error(ErrorKind::InternalContradiction, "2-connected graph without an outer cycle");
    if (auto chords = find_chords(g, walk); !chords.empty()) return at_chord(g, lists, path, chords.front(), depth);
    return on_cycle(g, lists, path, walk.vertices(), depth);
  }

 private:
  ExtensionStats& stats_;

  Colouring base_case(const PlaneGraph& g, const ListAssignment& lists) {
    ++stats_.base_cases;
    auto outcome = solve_list(g, lists);
    if (!outcome.witness) throw Error(ErrorKind::InternalContradiction, "small admissible instance has no colouring");
    return *outcome.witness;
  }

  Colouring by_component(const PlaneGraph& g, const ListAssignment& lists, const std::vector<Vertex>& path,
                         std::size_t depth) {
    ++stats_.component_splits;
    Colouring out;
    for (const auto& members : g.components()) {
      PlaneGraph part = component_subgraph(g, members);
      merge_into(out, run(part, lists_on(part, lists), path_within(part, path), depth + 1));
    }
    return out;
  }

  Colouring at_cut_vertex(const PlaneGraph& g, const ListAssignment& lists, const std::vector<Vertex>& path,
                          const Vertex& u, std::size_t depth) {
    ++stats_.cut_vertex_splits;
    auto [first, second] = split_at_cut_vertex(g, u);
    if (!holds_all(first, path)) std::swap(first, second);
    Colouring out = run(first, lists_on(first, lists), path, depth + 1);
    ListAssignment rest = lists_on(second, lists);
    rest.set(u, {out.at(u)});
    merge_into(out, run(second, rest, {u}, depth + 1));
    return out;
  }

  Colouring at_chord(const PlaneGraph& g, const ListAssignment& lists, const std::vector<Vertex>& path,
                     const Edge& chord, std::size_t depth) {
    ++stats_.chord_splits;
    auto [first, second] = split_at_chord(g, chord.u, chord.v);
    if (!holds_all(first, path)) std::swap(first, second);
    Colouring out = run(first, lists_on(first, lists), path, depth + 1);
    ListAssignment rest = lists_on(second, lists);
    rest.set(chord.u, {out.at(chord.u)});
    rest.set(chord.v, {out.at(chord.v)});
    merge_into(out, run(second, rest, {chord.u, chord.v}, depth + 1));
    return out;
  }

  void trim(ColourSet& list, std::size_t keep) {
    while (list.size() > keep) {
      list.erase(std::prev(list.end()));
      ++stats_.trimmed_colours;
    }
  }

  // Colours v with c, deletes it and strips c from its neighbours.
  static void settle(PlaneGraph& g, ListAssignment& lists, Colouring& out, const Vertex& v, const Colour& c) {
    out[v] = c;
    for (const auto& w : g.neighbours(v)) {
      ColourSet list = lists.at(w);
      list.erase(c);
      lists.set(w, std::move(list));
    }
    g = remove(g, v);
    lists.erase(v);
  }

  Colouring on_cycle(const PlaneGraph& g, ListAssignment lists, const std::vector<Vertex>& path,
                     std::vector<Vertex> cycle, std::size_t depth) {
    // Rotate to v0 = path[0], v1 = path[1].
    auto at0 = std::find(cycle.begin(), cycle.end(), path[0]);
    std::rotate(cycle.begin(), at0, cycle.end());
    if (cycle[1] != path[1]) std::reverse(cycle.begin() + 1, cycle.end());
    if (cycle[1] != path[1]) throw Error(ErrorKind::InternalContradiction, "precoloured edge is not on the cycle");
    const std::size_t k = cycle.size();
    const Vertex& v1 = cycle[1];
    const Vertex& v2 = cycle[2];
    const Colour c1 = *lists.at(v1).begin();

    for (const auto& v : g.vertices()) {
      if (v == cycle[0] || v == v1) continue;
      ColourSet list = lists.at(v);
      if (v == v2 && list.contains(c1)) {
        list.erase(c1);
        trim(list, 2);
        list.insert(c1);
      } else {
        trim(list, g.on_outer_boundary(v) ? 3 : 4);
      }
      lists.set(v, std::move(list));
    }

    if (!lists.at(v2).contains(c1)) {
      ++stats_.edge_drops;
      return run(remove(g, Edge(v1, v2)), lists, path, depth + 1);
    }

    std::vector<Colour> ab;
    for (const auto& c : lists.at(v2))
      if (c != c1) ab.push_back(c);
    const Vertex& v3 = cycle[3 % k];
    PlaneGraph h = g;
    Colouring out;
    for (const auto& c : ab) {
      if (!lists.at(v3).contains(c)) {
        ++stats_.v2_reductions;
        settle(h, lists, out, v2, c);
        merge_into(out, run(h, lists, path, depth + 1));
        return out;
      }
    }

    if (k < 4) throw Error(ErrorKind::InternalContradiction, "triangle with a precoloured vertex absorbs both colours");
    std::optional<Colour> d;
    for (const auto& c : lists.at(v3))
      if (c != ab[0] && c != ab[1]) d = c;
    if (!d) throw Error(ErrorKind::InternalContradiction, "list of " + v3.str() + " has no third colour");
    const Vertex& v4 = cycle[4 % k];
    if (!lists.at(v4).contains(*d)) {
      ++stats_.v3_reductions;
      settle(h, lists, out, v3, *d);
      merge_into(out, run(h, lists, path, depth + 1));
      return out;
    }

    // L(v4) holds d and shares at most two colours with L(v3), so it misses a or b.
    std::optional<std::size_t> missing;
    for (std::size_t i = 0; i < 2 && !missing; ++i)
      if (!lists.at(v4).contains(ab[i])) missing = i;
    if (!missing) throw Error(ErrorKind::InternalContradiction, "lists of " + v3.str() + " and " + v4.str() +
                                                                    " share three colours");
    ++stats_.pair_reductions;
    settle(h, lists, out, v3, ab[*missing]);
    settle(h, lists, out, v2, ab[1 - *missing]);
    merge_into(out, run(h, lists, path, depth + 1));
    return out;
  }
};

Colouring extend_pinned(const PlaneGraph& g, const ListAssignment& lists, const std::vector<Vertex>& path,
                        ExtensionStats& stats) {
  Extender ext(stats);
  return ext.run(g, lists_on(g, lists), path, 0);
}

void require_42(const PlaneGraph& g, const ListAssignment& lists) {
  require_cover(g, lists);
  auto report = validate_list_profile(g, lists, SeparationSpec{4, 2});
  if (!report.valid()) {
    std::string why = !report.short_lists.empty()
                          ? "list of " + report.short_lists.front().first.str() + " has fewer than 4 colours"
                          : "lists of " + report.heavy_edges.front().first.u.str() + " and " +
                                report.heavy_edges.front().first.v.str() + " share more than 2 colours";
    throw Error(ErrorKind::HypothesisViolated, why);
  }
}

// Extends a colouring of the pinned vertices of g, which sit on outer walks.
// Two pins whose edge has been buried inside g are handled by splitting along
// that edge first.
Colouring extend_exposed(const PlaneGraph& g, const ListAssignment& lists, const std::vector<Vertex>& pins,
                         ExtensionStats& stats) {
  Colouring out;
  for (const auto& members : g.components()) {
    PlaneGraph part = component_subgraph(g, members);
    auto path = path_within(part, pins);
    if (path.size() == 2 && part.has_edge(path[0], path[1]) && !part.is_outer_edge(path[0], path[1])) {
      auto [a, b] = split_at_chord(part, path[0], path[1]);
      merge_into(out, extend_pinned(a, lists, path, stats));
      merge_into(out, extend_pinned(b, lists, path, stats));
    } else {
      merge_into(out, extend_pinned(part, lists, path, stats));
    }
  }
  return out;
}

// Deletes the first clique vertex, makes its neighbours outer, and extends.
Colouring around_clique(const PlaneGraph& g, const ListAssignment& lists,
                        const std::vector<std::pair<Vertex, Colour>>& clique, ExtensionStats& stats) {
  const auto& [v1, c1] = clique.front();
  PlaneGraph rest = remove_exposing(g, v1);
  ListAssignment lp = lists_on(rest, lists);
  std::vector<Vertex> pins;
  for (std::size_t i = 1; i < clique.size(); ++i) {
    lp.set(clique[i].first, {clique[i].second});
    pins.push_back(clique[i].first);
  }
  for (const auto& w : g.neighbours(v1)) {
    if (std::find(pins.begin(), pins.end(), w) != pins.end()) continue;
    ColourSet list = lp.at(w);
    list.erase(c1);
    lp.set(w, std::move(list));
  }
  Colouring out{{v1, c1}};
  merge_into(out, extend_exposed(rest, lp, pins, stats));
  return out;
}

Colouring around_k4(const PlaneGraph& g, const ListAssignment& lists,
                    const std::vector<std::pair<Vertex, Colour>>& clique, ExtensionStats& stats) {
  std::set<Edge> walls;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) walls.insert(Edge(clique[i].first, clique[j].first));
  const auto labels = face_regions(g, walls);
  std::map<std::size_t, std::vector<std::size_t>> regions;
  for (std::size_t f = 0; f < labels.size(); ++f) regions[labels[f]].push_back(f);
  if (regions.size() != 4) throw Error(ErrorKind::InternalContradiction, "K4 does not cut the plane into four regions");
  const std::size_t outer_label = labels.at(g.component_outer_faces().front().value());

  struct Region {
    std::set<Vertex> vertices;
    std::set<Edge> edges;
    std::set<Dart> outward;
  };
  auto collect = [&](const std::vector<std::size_t>& faces) {
    Region r;
    for (auto f : faces) {
      for (const auto& d : g.face(f).walk) {
        r.vertices.insert(d.from);
        r.vertices.insert(d.to);
        r.edges.insert(Edge(d.from, d.to));
        if (walls.contains(Edge(d.from, d.to))) r.outward.insert(d.reversed());
      }
    }
    return r;
  };

  const Region outer_region = collect(regions.at(outer_label));
  std::optional<std::size_t> apex;
  for (std::size_t i = 0; i < 4; ++i)
    if (!outer_region.vertices.contains(clique[i].first)) apex = i;
  if (!apex) throw Error(ErrorKind::InternalContradiction, "every K4 vertex touches the outer region");
  const auto& [v4, c4] = clique[*apex];

  Colouring out;
  for (const auto& [label, faces] : regions) {
    if (label == outer_label) continue;
    Region r = collect(faces);
    PlaneGraph inner = remove_exposing(edge_subgraph(g, r.vertices, r.edges, {r.outward}), v4);
    ListAssignment lp = lists_on(inner, lists);
    std::vector<Vertex> pins;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == *apex || !inner.has_vertex(clique[i].first)) continue;
      lp.set(clique[i].first, {clique[i].second});
      pins.push_back(clique[i].first);
    }
    for (const auto& w : g.neighbours(v4)) {
      if (!inner.has_vertex(w) || std::find(pins.begin(), pins.end(), w) != pins.end()) continue;
      ColourSet list = lp.at(w);
      list.erase(c4);
      lp.set(w, std::move(list));
    }
    merge_into(out, extend_exposed(inner, lp, pins, stats));
  }

  PlaneGraph outside = edge_subgraph(g, outer_region.vertices, outer_region.edges, {g.outer_darts()});
  std::vector<std::pair<Vertex, Colour>> triangle;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != *apex) triangle.push_back(clique[i]);
  merge_into(out, around_clique(outside, lists, triangle, stats));
  out[v4] = c4;
  return out;
}

void require_clique(const PlaneGraph& g, const std::vector<Vertex>& h) {
  if (h.size() > 4) throw Error(ErrorKind::NotAClique, "a plane graph has no clique on more than four vertices");
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!g.has_vertex(h[i])) throw Error(ErrorKind::NotAClique, h[i].str() + " is not in the graph");
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      if (h[i] == h[j]) throw Error(ErrorKind::NotAClique, h[i].str() + " is listed twice");
      if (!g.has_edge(h[i], h[j])) throw Error(ErrorKind::NotAClique, h[i].str() + " and " + h[j].str() + " are not adjacent");
    }
  }
}

bool hits(const std::vector<Vertex>& h, const Triangle& t) {
  return std::any_of(h.begin(), h.end(), [&](const Vertex& v) { return std::find(t.begin(), t.end(), v) != t.end(); });
}

bool hits_all(const std::vector<Vertex>& h, const std::vector<Triangle>& ts) {
  return std::all_of(ts.begin(), ts.end(), [&](const Triangle& t) { return hits(h, t); });
}

void require_proper(const PlaneGraph& g, const ListAssignment& lists, const Colouring& out) {
  if (!check(g, lists, out).proper) throw Error(ErrorKind::InternalContradiction, "constructed colouring is not proper");
}

}  // namespace

std::optional<std::string> extension_violation(const ExtensionInstance& inst) {
  return violation(inst.graph, inst.path.vertices, inst.path.colours, inst.lists);
}

Colouring extend_precoloured(const ExtensionInstance& inst, ExtensionStats* stats) {
  if (auto why = extension_violation(inst)) throw Error(ErrorKind::HypothesisViolated, *why);
  ListAssignment lists = lists_on(inst.graph, inst.lists);
  for (std::size_t i = 0; i < inst.path.size(); ++i) lists.set(inst.path.vertices[i], {inst.path.colours[i]});
  ExtensionStats local;
  Colouring out = extend_pinned(inst.graph, lists, inst.path.vertices, local);
  if (stats) *stats += local;
  require_proper(inst.graph, inst.lists, out);
  return out;
}

Colouring colour_no_offensive(const PlaneGraph& g, const ListAssignment& lists, ExtensionStats* stats) {
  require_42(g, lists);
  return extend_precoloured(ExtensionInstance{g, {}, lists}, stats);
}

Colouring colour_with_clique(const PlaneGraph& g, const ListAssignment& lists, const HittingClique& clique,
                             ExtensionStats* stats) {
  require_42(g, lists);
  std::vector<Vertex> h = clique.vertices;
  require_clique(g, h);
  std::sort(h.begin(), h.end());
  for (const auto& t : offensive_triangles(g, lists)) {
    if (!hits(h, t))
      throw Error(ErrorKind::DoesNotHitAllOffensiveTriangles,
                  "offensive triangle " + t[0].str() + t[1].str() + t[2].str() + " misses the clique");
  }
  if (h.empty()) return colour_no_offensive(g, lists, stats);

  ExtensionStats local;
  Colouring out;
  const std::size_t hub = g.component_of(h.front());
  for (std::size_t i = 0; i < g.components().size(); ++i) {
    if (i == hub) continue;
    PlaneGraph part = component_subgraph(g, g.components()[i]);
    merge_into(out, extend_pinned(part, lists, {}, local));
  }

  std::vector<std::pair<Vertex, Colour>> coloured;
  for (const auto& v : h) {
    std::optional<Colour> pick;
    for (const auto& c : lists.at(v)) {
      bool used = std::any_of(coloured.begin(), coloured.end(), [&](const auto& vc) { return vc.second == c; });
      if (!used) {
        pick = c;
        break;
      }
    }
    if (!pick) throw Error(ErrorKind::InternalContradiction, "no free colour for clique vertex " + v.str());
    coloured.emplace_back(v, *pick);
  }

  PlaneGraph main = component_subgraph(g, g.components()[hub]);
  merge_into(out, h.size() == 4 ? around_k4(main, lists, coloured, local) : around_clique(main, lists, coloured, local));
  if (stats) *stats += local;
  require_proper(g, lists, out);
  return out;
}

std::optional<HittingClique> find_hitting_clique(const PlaneGraph& g, const ListAssignment& lists) {
  const auto bad = offensive_triangles(g, lists);
  if (bad.empty()) return HittingClique{};
  std::vector<std::vector<Vertex>> candidates;
  for (const auto& v : g.vertices()) candidates.push_back({v});
  for (const auto& e : g.edges()) candidates.push_back({e.u, e.v});
  const auto triangles = enumerate_triangles(g);
  for (const auto& t : triangles) {
    candidates.push_back({t[0], t[1], t[2]});
    for (const auto& w : g.neighbours(t[0])) {
      if (w <= t[2] || !g.has_edge(w, t[1]) || !g.has_edge(w, t[2])) continue;
      candidates.push_back({t[0], t[1], t[2], w});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  for (const auto& c : candidates)
    if (hits_all(c, bad)) return HittingClique{c};
  return std::nullopt;
}

}  // namespace sepcol
