#include "sepcol/generators.hpp"

#include <algorithm>
#include <random>

#include "sepcol/error.hpp"

namespace sepcol {

namespace {

std::vector<Vertex> padded_names(std::size_t n) {
  const std::size_t width = std::to_string(n - 1).size();
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = std::to_string(i);
    out.emplace_back(std::string(width - s.size(), '0') + s);
  }
  return out;
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Corner of a face: vertex `at`, entered along the edge from `from`.
struct Corner {
  Vertex from;
  Vertex at;
};

// Puts z into the corner, i.e. immediately before `from` in the rotation at `at`.
void insert_into_corner(Rotation& rot, const Corner& corner, const Vertex& z) {
  auto& around = rot.at(corner.at);
  around.insert(std::find(around.begin(), around.end(), corner.from), z);
}

}  // namespace

PlaneGraph gen_random_plane(std::size_t n, std::uint64_t seed, PlaneGenOptions options) {
  if (n == 0) throw Error(ErrorKind::BadParameters, "a graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  const std::vector<Vertex> names = padded_names(n);
  Rotation rot;
  rot[names[0]];
  if (n >= 2) {
    rot[names[0]] = {names[1]};
    rot[names[1]] = {names[0]};
  }

  for (std::size_t i = 2; i < n; ++i) {
    const Vertex& z = names[i];
    const auto faces = trace_faces(PlaneGraph::from_rotation(rot, {}));
    const Face& face = faces[uniform(rng, 0, faces.size() - 1)];

    std::vector<std::size_t> order(face.walk.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);

    const std::size_t want = uniform(rng, 1, options.triangle_free ? 2 : 3);
    std::vector<std::size_t> picked;
    for (auto k : order) {
      if (picked.size() == want) break;
      const Vertex& at = face.walk[k].to;
      bool clash = false;
      for (auto p : picked) {
        const Vertex& other = face.walk[p].to;
        const auto& around = rot.at(other);
        const bool adjacent = std::find(around.begin(), around.end(), at) != around.end();
        if (other == at || (options.triangle_free && adjacent)) clash = true;
      }
      if (!clash) picked.push_back(k);
    }
    std::sort(picked.begin(), picked.end());

    rot[z];
    for (auto k : picked) {
      const Corner corner{face.walk[k].from, face.walk[k].to};
      insert_into_corner(rot, corner, z);
      rot[z].push_back(corner.at);
    }
  }

  for (std::size_t k = 0; k < options.deletions; ++k) {
    std::vector<Edge> edges;
    for (const auto& [v, around] : rot)
      for (const auto& w : around)
        if (v < w) edges.emplace_back(v, w);
    if (edges.empty()) break;
    const Edge e = edges[uniform(rng, 0, edges.size() - 1)];
    std::erase(rot[e.u], e.v);
    std::erase(rot[e.v], e.u);
  }

  return PlaneGraph::build(names, std::move(rot));
}

ListAssignment gen_random_assignment(const PlaneGraph& g, SeparationSpec spec, std::size_t palette,
                                     std::uint64_t seed, AssignmentGenOptions options) {
  if (palette < spec.min_list)
    throw Error(ErrorKind::BadParameters, "palette of " + std::to_string(palette) + " colours is smaller than a list");
  std::mt19937_64 rng(seed);
  std::vector<Colour> colours;
  for (std::size_t i = 1; i <= palette; ++i) colours.emplace_back(std::to_string(i));

  ListAssignment out;
  for (const auto& v : g.vertices()) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < options.retries && !placed; ++attempt) {
      std::shuffle(colours.begin(), colours.end(), rng);
      const ColourSet list(colours.begin(), colours.begin() + static_cast<std::ptrdiff_t>(spec.min_list));
      placed = true;
      const auto& nbrs = g.neighbours(v);
      for (const auto& w : nbrs) {
        if (out.covers(w) && shared_colours(list, out.at(w)) > spec.max_shared) placed = false;
      }
      if (placed && options.forbid_offensive) {
        for (std::size_t x = 0; x < nbrs.size() && placed; ++x) {
          for (std::size_t y = x + 1; y < nbrs.size() && placed; ++y) {
            if (!out.covers(nbrs[x]) || !out.covers(nbrs[y]) || !g.has_edge(nbrs[x], nbrs[y])) continue;
            std::size_t common = 0;
            for (const auto& c : list)
              if (out.at(nbrs[x]).contains(c) && out.at(nbrs[y]).contains(c)) ++common;
            if (common == 2) placed = false;
          }
        }
      }
      if (placed) out.set(v, list);
    }
    if (!placed)
      throw Error(ErrorKind::RetriesExhausted, "no admissible list for " + v.str() + " after " +
                                                   std::to_string(options.retries) + " attempts");
  }
  return out;
}

}  // namespace sepcol
