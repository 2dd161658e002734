#include "sepcol/gadgets.hpp"

#include <cmath>
#include <numeric>

#include "sepcol/error.hpp"

namespace sepcol {

namespace {

struct Point {
  double x;
  double y;
};

// Drawing of the gadget; rotations are read off it counter-clockwise.
const std::map<std::string, Point>& layout() {
  static const std::map<std::string, Point> pts{
      {"v1", {0, 6}},      {"v2", {0, -6}},     {"v3", {-9.5, 0}}, {"v4", {9.5, 0}},    {"v5", {0, 0}},
      {"v6", {2.9, 1.5}},  {"v7", {2.9, -1.5}}, {"v8", {-2.9, 1.5}}, {"v9", {-2.9, -1.5}},
  };
  return pts;
}

const std::vector<std::pair<std::string, std::string>>& role_edges() {
  static const std::vector<std::pair<std::string, std::string>> edges{
      {"v1", "v3"}, {"v1", "v8"}, {"v1", "v5"}, {"v1", "v6"}, {"v1", "v4"}, {"v2", "v3"}, {"v2", "v9"},
      {"v2", "v5"}, {"v2", "v7"}, {"v2", "v4"}, {"v3", "v8"}, {"v3", "v9"}, {"v4", "v6"}, {"v4", "v7"},
      {"v5", "v6"}, {"v5", "v7"}, {"v5", "v8"}, {"v5", "v9"}, {"v6", "v7"}, {"v8", "v9"},
  };
  return edges;
}

std::vector<std::string> role_lists(const std::string& role, const Colour& a, const Colour& b) {
  const std::string& x = a.str();
  const std::string& y = b.str();
  static const std::map<std::string, std::vector<std::string>> fixed{
      {"v3", {"1", "2"}}, {"v4", {"3", "4"}}, {"v5", {"5", "6"}}, {"v6", {"3", "4", "5"}},
      {"v7", {"3", "4", "5"}}, {"v8", {"1", "2", "6"}}, {"v9", {"1", "2", "6"}},
  };
  if (role == "v1") return {x};
  if (role == "v2") return {y};
  std::vector<std::string> out = fixed.at(role);
  if (role == "v3" || role == "v4" || role == "v5") {
    out.push_back(x);
    out.push_back(y);
  } else if (role == "v6" || role == "v8") {
    out.push_back(x);
  } else {
    out.push_back(y);
  }
  return out;
}

// Matched colours on an edge; every pair is (c, c).
std::vector<std::string> role_matching(const std::string& p, const std::string& q, const Colour& a, const Colour& b) {
  if (p == "v1" || q == "v1") return {a.str()};
  if (p == "v2" || q == "v2") return {b.str()};
  const std::set<std::string> ends{p, q};
  auto is = [&](const char* s, const char* t) { return ends == std::set<std::string>{s, t}; };
  if (is("v4", "v6") || is("v4", "v7") || is("v6", "v7")) return {"3", "4"};
  if (is("v3", "v8") || is("v3", "v9") || is("v8", "v9")) return {"1", "2"};
  if (is("v5", "v6") || is("v5", "v7")) return {"5"};
  if (is("v5", "v8") || is("v5", "v9")) return {"6"};
  return {};
}

// Counter-clockwise neighbour roles of a role in the drawing, starting from the
// direction closest to angle -pi.
std::vector<std::string> role_rotation(const std::string& role) {
  const Point c = layout().at(role);
  std::vector<std::pair<double, std::string>> around;
  for (const auto& [p, q] : role_edges()) {
    if (p != role && q != role) continue;
    const std::string& other = p == role ? q : p;
    const Point o = layout().at(other);
    around.emplace_back(std::atan2(o.y - c.y, o.x - c.x), other);
  }
  std::sort(around.begin(), around.end());
  std::vector<std::string> out;
  for (const auto& [angle, name] : around) out.push_back(name);
  return out;
}

void require_gadget_colours(const Colour& a, const Colour& b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::BadParameters, "gadget colours must be non-empty");
  if (a == b) throw Error(ErrorKind::BadParameters, "gadget colours must differ");
  for (int i = 1; i <= 6; ++i) {
    const Colour reserved(std::to_string(i));
    if (a == reserved || b == reserved)
      throw Error(ErrorKind::BadParameters, "gadget colours must avoid the tokens 1 to 6");
  }
}

// Adds lists and matchings of one copy whose roles are already named.
void assign_copy(CorrespondenceAssignment& assignment, const GadgetCopy& copy, bool with_hubs) {
  for (const auto& [role, v] : copy.roles) {
    if (!with_hubs && (role == "v1" || role == "v2")) continue;
    ColourSet list;
    for (const auto& c : role_lists(role, copy.a, copy.b)) list.insert(Colour(c));
    assignment.base().set(v, list);
  }
  for (const auto& [p, q] : role_edges()) {
    Matching m;
    for (const auto& c : role_matching(p, q, copy.a, copy.b)) m.emplace(Colour(c), Colour(c));
    assignment.set_matching(copy.roles.at(p), copy.roles.at(q), m);
  }
}

std::uint64_t product_of_sizes(const ListAssignment& lists, const std::vector<Vertex>& vs) {
  return std::accumulate(vs.begin(), vs.end(), std::uint64_t{1},
                         [&](std::uint64_t acc, const Vertex& v) { return acc * lists.at(v).size(); });
}

}  // namespace

GadgetInstance build_gadget_h(const Colour& a, const Colour& b) {
  require_gadget_colours(a, b);
  GadgetCopy copy{a, b, {}};
  std::vector<Vertex> vertices;
  Rotation rotation;
  for (const auto& [role, pt] : layout()) {
    copy.roles.emplace(role, Vertex(role));
    vertices.emplace_back(role);
  }
  for (const auto& [role, pt] : layout()) {
    auto& rot = rotation[Vertex(role)];
    for (const auto& n : role_rotation(role)) rot.emplace_back(n);
  }
  PlaneGraph g = PlaneGraph::build(vertices, rotation, {{"v1"_v, "v3"_v, "v2"_v, "v4"_v}});
  CorrespondenceAssignment assignment;
  assign_copy(assignment, copy, true);
  return GadgetInstance{std::move(g), std::move(assignment), "v1"_v, "v2"_v, {copy}};
}

GadgetInstance build_counterexample_g42() {
  const Vertex u1("u1");
  const Vertex u2("u2");
  std::vector<GadgetCopy> copies;
  for (int a = 7; a <= 10; ++a) {
    for (int b = 11; b <= 14; ++b) {
      GadgetCopy copy{Colour(std::to_string(a)), Colour(std::to_string(b)), {}};
      const std::string suffix = "_" + std::to_string(a) + "_" + std::to_string(b);
      for (const auto& [role, pt] : layout()) {
        if (role == "v1")
          copy.roles.emplace(role, u1);
        else if (role == "v2")
          copy.roles.emplace(role, u2);
        else
          copy.roles.emplace(role, Vertex(role + suffix));
      }
      copies.push_back(std::move(copy));
    }
  }

  std::vector<Vertex> vertices{u1, u2};
  Rotation rotation;
  for (const auto& copy : copies) {
    for (const auto& [role, v] : copy.roles) {
      if (role == "v1" || role == "v2") continue;
      vertices.push_back(v);
      auto& rot = rotation[v];
      for (const auto& n : role_rotation(role)) rot.push_back(copy.roles.at(n));
    }
    for (const auto& n : role_rotation("v1")) rotation[u1].push_back(copy.roles.at(n));
  }
  for (auto it = copies.rbegin(); it != copies.rend(); ++it)
    for (const auto& n : role_rotation("v2")) rotation[u2].push_back(it->roles.at(n));

  const std::vector<Vertex> outer{u1, copies.front().roles.at("v3"), u2, copies.back().roles.at("v4")};
  PlaneGraph g = PlaneGraph::build(vertices, rotation, {outer});

  CorrespondenceAssignment assignment;
  assignment.base().set(u1, {"7"_c, "8"_c, "9"_c, "10"_c});
  assignment.base().set(u2, {"11"_c, "12"_c, "13"_c, "14"_c});
  for (const auto& copy : copies) assign_copy(assignment, copy, false);
  return GadgetInstance{std::move(g), std::move(assignment), u1, u2, std::move(copies)};
}

PlaneGraph copy_subgraph(const GadgetInstance& inst, const GadgetCopy& copy) {
  std::set<Vertex> vertices;
  for (const auto& [role, v] : copy.roles) vertices.insert(v);
  std::set<Edge> edges;
  for (const auto& [p, q] : role_edges()) {
    const Vertex& x = copy.roles.at(p);
    const Vertex& y = copy.roles.at(q);
    if (inst.graph.has_edge(x, y)) edges.insert(Edge(x, y));
  }
  return edge_subgraph(inst.graph, vertices, edges, {});
}

CounterexampleReport verify_counterexample(const GadgetInstance& inst) {
  CounterexampleReport report;
  const ListAssignment& lists = inst.assignment.base();
  for (const auto& c1 : lists.at(inst.u1)) {
    for (const auto& c2 : lists.at(inst.u2)) {
      std::optional<std::size_t> index;
      for (std::size_t i = 0; i < inst.copies.size() && !index; ++i)
        if (inst.copies[i].a == c1 && inst.copies[i].b == c2) index = i;
      if (!index)
        throw Error(ErrorKind::VerificationFailed, "no copy for hub colours (" + c1.str() + "," + c2.str() + ")");
      const GadgetCopy& copy = inst.copies[*index];
      PlaneGraph part = copy_subgraph(inst, copy);

      CorrespondenceAssignment local;
      std::vector<Vertex> free;
      for (const auto& v : part.vertices()) {
        if (v == inst.u1)
          local.base().set(v, {c1});
        else if (v == inst.u2)
          local.base().set(v, {c2});
        else {
          local.base().set(v, lists.at(v));
          free.push_back(v);
        }
      }
      for (const auto& e : part.edges()) local.set_matching(e.u, e.v, inst.assignment.matching(e.u, e.v));

      CopyVerdict verdict{c1, c2, *index, free.size(), product_of_sizes(lists, free), 0};
      verdict.colourings = enumerate_corr(part, local, verdict.search_space).size();
      if (verdict.colourings != 0)
        throw Error(ErrorKind::VerificationFailed, "copy (" + c1.str() + "," + c2.str() + ") has " +
                                                       std::to_string(verdict.colourings) + " colourings");
      report.entries.push_back(verdict);
    }
  }
  auto whole = solve_corr(inst.graph, inst.assignment);
  report.whole_graph = whole.status;
  report.whole_graph_nodes = whole.nodes;
  if (whole.status != SearchStatus::NotColourable)
    throw Error(ErrorKind::VerificationFailed, std::string("whole graph search: ") + to_string(whole.status));
  return report;
}

Not43Report verify_not_43_choosable(const GadgetInstance& inst) {
  Not43Report report;
  const ListAssignment& lists = inst.assignment.base();
  auto profile = validate_list_profile(inst.graph, lists, SeparationSpec{4, 3});
  report.max_intersection = profile.max_intersection;
  report.list_profile_valid = profile.valid();
  if (!report.list_profile_valid) throw Error(ErrorKind::VerificationFailed, "lists are not a (4,3)-assignment");

  const CorrespondenceAssignment identity = identity_correspondence(inst.graph, lists);
  report.identity_submatching = true;
  for (const auto& [e, pairs] : inst.assignment.matchings()) {
    const Matching full = identity.matching(e.u, e.v);
    for (const auto& pair : pairs)
      if (!full.contains(pair)) report.identity_submatching = false;
  }
  if (!report.identity_submatching)
    throw Error(ErrorKind::VerificationFailed, "a matched pair is not an identity pair on shared colours");

  auto outcome = solve_list(inst.graph, lists);
  report.list_status = outcome.status;
  report.nodes = outcome.nodes;
  if (outcome.status != SearchStatus::NotColourable)
    throw Error(ErrorKind::VerificationFailed, std::string("list search: ") + to_string(outcome.status));
  return report;
}

}  // namespace sepcol
