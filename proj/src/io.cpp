#include "sepcol/io.hpp"

#include <fstream>
#include <sstream>

#include "sepcol/error.hpp"

namespace sepcol {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, (where.empty() ? std::string("/") : where) + ": " + what);
}

std::string escape(const std::string& key) {
  std::string out;
  for (char ch : key) {
    if (ch == '~')
      out += "~0";
    else if (ch == '/')
      out += "~1";
    else
      out += ch;
  }
  return out;
}

std::string at_key(const std::string& where, const std::string& key) { return where + "/" + escape(key); }
std::string at_index(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing \"" + key + "\"");
  return *it;
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<Vertex> vertex_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.emplace_back(text(j[i], at_index(where, i)));
  return out;
}

ColourSet colour_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  ColourSet out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!out.emplace(text(j[i], at_index(where, i))).second) fail(at_index(where, i), "repeated colour");
  }
  return out;
}

PlaneGraph graph_at(const Json& j, const std::string& where) {
  const std::string vw = at_key(where, "vertices");
  std::vector<Vertex> vertices = vertex_array(member(j, "vertices", where), vw);
  const Json& rot = member(j, "rotation", where);
  const std::string rw = at_key(where, "rotation");
  if (!rot.is_object()) fail(rw, "expected an object");
  Rotation rotation;
  for (const auto& [key, nbrs] : rot.items()) rotation[Vertex(key)] = vertex_array(nbrs, at_key(rw, key));

  std::vector<std::vector<Vertex>> hints;
  if (auto it = j.find("outer"); it != j.end()) {
    const std::string ow = at_key(where, "outer");
    if (!it->is_array()) fail(ow, "expected an array");
    if (!it->empty() && it->front().is_array()) {
      for (std::size_t i = 0; i < it->size(); ++i) hints.push_back(vertex_array((*it)[i], at_index(ow, i)));
    } else {
      hints.push_back(vertex_array(*it, ow));
    }
  }
  return PlaneGraph::build(std::move(vertices), std::move(rotation), hints);
}

ListAssignment lists_at(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  ListAssignment out;
  for (const auto& [key, colours] : j.items()) out.set(Vertex(key), colour_array(colours, at_key(where, key)));
  return out;
}

CorrespondenceAssignment correspondence_at(const Json& j, const ListAssignment& base, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  CorrespondenceAssignment out(base);
  for (const auto& [key, pairs] : j.items()) {
    const std::string kw = at_key(where, key);
    auto bar = key.find('|');
    if (bar == std::string::npos || key.find('|', bar + 1) != std::string::npos)
      fail(kw, "edge key must look like \"u|v\"");
    Vertex u(key.substr(0, bar));
    Vertex v(key.substr(bar + 1));
    if (u.empty() || v.empty() || u == v) fail(kw, "edge key needs two distinct vertices");
    if (!pairs.is_array()) fail(kw, "expected an array of pairs");
    Matching m;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string pw = at_index(kw, i);
      if (!pairs[i].is_array() || pairs[i].size() != 2) fail(pw, "expected a pair of colours");
      m.emplace(Colour(text(pairs[i][0], at_index(pw, 0))), Colour(text(pairs[i][1], at_index(pw, 1))));
    }
    // Keys written as "v|u" with v > u are read in that direction.
    out.set_matching(u, v, m);
  }
  return out;
}

PrecolouredPath path_at(const Json& j, const std::string& where) {
  PrecolouredPath p;
  p.vertices = vertex_array(member(j, "vertices", where), at_key(where, "vertices"));
  const std::string cw = at_key(where, "colours");
  const Json& cs = member(j, "colours", where);
  if (!cs.is_array()) fail(cw, "expected an array");
  for (std::size_t i = 0; i < cs.size(); ++i) p.colours.emplace_back(text(cs[i], at_index(cw, i)));
  if (p.colours.size() != p.vertices.size()) fail(cw, "needs one colour per path vertex");
  return p;
}

// Inline value, or a file name relative to base_dir.
Json resolve(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_string()) return j;
  std::filesystem::path file(j.get<std::string>());
  if (file.is_relative()) file = base_dir / file;
  return read_json_file(file);
}

}  // namespace

Json parse_json(const std::string& source_text, const std::string& source) {
  try {
    return Json::parse(source_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, source + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

Json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::ParseError, file.string() + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), file.string());
}

Json graph_to_json(const PlaneGraph& g) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back(v.str());
  j["rotation"] = Json::object();
  for (const auto& [v, nbrs] : g.rotation()) {
    Json arr = Json::array();
    for (const auto& w : nbrs) arr.push_back(w.str());
    j["rotation"][v.str()] = std::move(arr);
  }
  Json walks = Json::array();
  for (const auto& f : g.component_outer_faces()) {
    if (!f) continue;
    Json walk = Json::array();
    for (const auto& d : g.face(*f).walk) walk.push_back(d.from.str());
    walk.push_back(g.face(*f).walk.back().to.str());
    walks.push_back(std::move(walk));
  }
  j["outer"] = walks.size() == 1 ? walks.front() : walks;
  return j;
}

PlaneGraph graph_from_json(const Json& j) { return graph_at(j, ""); }

Json lists_to_json(const ListAssignment& lists) {
  Json j = Json::object();
  for (const auto& [v, colours] : lists.lists()) {
    Json arr = Json::array();
    for (const auto& c : colours) arr.push_back(c.str());
    j[v.str()] = std::move(arr);
  }
  return j;
}

ListAssignment lists_from_json(const Json& j) { return lists_at(j, ""); }

Json matchings_to_json(const CorrespondenceAssignment& a) {
  Json j = Json::object();
  for (const auto& [e, pairs] : a.matchings()) {
    Json arr = Json::array();
    for (const auto& [cu, cv] : pairs) arr.push_back(Json::array({cu.str(), cv.str()}));
    j[e.u.str() + "|" + e.v.str()] = std::move(arr);
  }
  return j;
}

CorrespondenceAssignment correspondence_from_json(const Json& j, const ListAssignment& base) {
  return correspondence_at(j, base, "");
}

Json colouring_to_json(const Colouring& c) {
  Json j = Json::object();
  for (const auto& [v, colour] : c) j[v.str()] = colour.str();
  return j;
}

Colouring colouring_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected an object");
  Colouring out;
  for (const auto& [key, value] : j.items()) out[Vertex(key)] = Colour(text(value, at_key("", key)));
  return out;
}

Json path_to_json(const PrecolouredPath& p) {
  Json j;
  j["vertices"] = Json::array();
  j["colours"] = Json::array();
  for (const auto& v : p.vertices) j["vertices"].push_back(v.str());
  for (const auto& c : p.colours) j["colours"].push_back(c.str());
  return j;
}

PrecolouredPath path_from_json(const Json& j) { return path_at(j, ""); }

void check_consistency(const InstanceBundle& b) {
  for (const auto& [v, colours] : b.lists.lists())
    if (!b.graph.has_vertex(v)) throw Error(ErrorKind::ConsistencyError, "list for unknown vertex " + v.str());
  for (const auto& v : b.graph.vertices())
    if (!b.lists.covers(v)) throw Error(ErrorKind::ConsistencyError, "no list for " + v.str());
  if (b.correspondence) {
    for (const auto& [e, pairs] : b.correspondence->matchings())
      if (!b.graph.has_edge(e.u, e.v))
        throw Error(ErrorKind::ConsistencyError, "matching on non-edge " + e.u.str() + "|" + e.v.str());
  }
  if (b.path) {
    for (const auto& v : b.path->vertices)
      if (!b.graph.has_vertex(v)) throw Error(ErrorKind::ConsistencyError, "path vertex " + v.str() + " is unknown");
  }
}

InstanceBundle bundle_from_json(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) fail("", "expected an object");
  InstanceBundle b;
  b.graph = graph_at(resolve(member(j, "graph", ""), base_dir), "/graph");
  b.lists = lists_at(resolve(member(j, "lists", ""), base_dir), "/lists");
  if (auto it = j.find("correspondence"); it != j.end() && !it->is_null())
    b.correspondence = correspondence_at(resolve(*it, base_dir), b.lists, "/correspondence");
  if (auto it = j.find("spec"); it != j.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_unsigned() || !(*it)[1].is_number_unsigned())
      fail("/spec", "expected [l, k] with non-negative integers");
    b.spec = SeparationSpec{(*it)[0].get<std::size_t>(), (*it)[1].get<std::size_t>()};
  }
  if (auto it = j.find("path"); it != j.end() && !it->is_null()) b.path = path_at(*it, "/path");
  check_consistency(b);
  return b;
}

Json bundle_to_json(const InstanceBundle& b) {
  Json j;
  j["graph"] = graph_to_json(b.graph);
  j["lists"] = lists_to_json(b.lists);
  if (b.correspondence) j["correspondence"] = matchings_to_json(*b.correspondence);
  if (b.spec) j["spec"] = Json::array({b.spec->min_list, b.spec->max_shared});
  if (b.path) j["path"] = path_to_json(*b.path);
  return j;
}

InstanceBundle read_bundle(const std::filesystem::path& file) {
  return bundle_from_json(read_json_file(file), file.parent_path());
}

}  // namespace sepcol
