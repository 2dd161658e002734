#include "sepcol/assignments.hpp"

#include <algorithm>
#include <iterator>

#include "sepcol/error.hpp"

namespace sepcol {

const ColourSet& ListAssignment::at(const Vertex& v) const {
  auto it = lists_.find(v);
  if (it == lists_.end()) throw Error(ErrorKind::MissingList, "no list for " + v.str());
  return it->second;
}

std::vector<Vertex> ListAssignment::empty_lists() const {
  std::vector<Vertex> out;
  for (const auto& [v, colours] : lists_)
    if (colours.empty()) out.push_back(v);
  return out;
}

Matching CorrespondenceAssignment::matching(const Vertex& u, const Vertex& v) const {
  auto it = matchings_.find(Edge(u, v));
  if (it == matchings_.end()) return {};
  if (u < v) return it->second;
  Matching flipped;
  for (const auto& [a, b] : it->second) flipped.emplace(b, a);
  return flipped;
}

void CorrespondenceAssignment::set_matching(const Vertex& u, const Vertex& v, const Matching& pairs) {
  auto& dst = matchings_[Edge(u, v)];
  dst.clear();
  for (const auto& [cu, cv] : pairs) {
    if (u < v)
      dst.emplace(cu, cv);
    else
      dst.emplace(cv, cu);
  }
}

void CorrespondenceAssignment::add_pair(const Vertex& u, const Colour& cu, const Vertex& v, const Colour& cv) {
  if (u < v)
    matchings_[Edge(u, v)].emplace(cu, cv);
  else
    matchings_[Edge(u, v)].emplace(cv, cu);
}

bool CorrespondenceAssignment::forbids(const Vertex& u, const Colour& cu, const Vertex& v, const Colour& cv) const {
  auto it = matchings_.find(Edge(u, v));
  if (it == matchings_.end()) return false;
  return u < v ? it->second.contains({cu, cv}) : it->second.contains({cv, cu});
}

std::size_t shared_colours(const ColourSet& a, const ColourSet& b) {
  std::size_t n = 0;
  for (const auto& c : a) n += b.contains(c) ? 1 : 0;
  return n;
}

void require_cover(const PlaneGraph& g, const ListAssignment& lists) {
  for (const auto& v : g.vertices())
    if (!lists.covers(v)) throw Error(ErrorKind::MissingList, "no list for " + v.str());
}

ListProfileReport validate_list_profile(const PlaneGraph& g, const ListAssignment& lists, SeparationSpec spec) {
  require_cover(g, lists);
  ListProfileReport report;
  report.spec = spec;
  for (const auto& v : g.vertices()) {
    auto n = lists.at(v).size();
    if (n < spec.min_list) report.short_lists.emplace_back(v, n);
  }
  for (const auto& e : g.edges()) {
    auto n = shared_colours(lists.at(e.u), lists.at(e.v));
    report.max_intersection = std::max(report.max_intersection, n);
    if (n > spec.max_shared) report.heavy_edges.emplace_back(e, n);
  }
  return report;
}

CorrProfileReport validate_corr_profile(const PlaneGraph& g, const CorrespondenceAssignment& a, SeparationSpec spec) {
  require_cover(g, a.base());
  for (const auto& [e, pairs] : a.matchings()) {
    if (!g.has_edge(e.u, e.v))
      throw Error(ErrorKind::MatchingOnNonEdge, "matching on non-edge " + e.u.str() + "|" + e.v.str());
  }
  CorrProfileReport report;
  report.spec = spec;
  for (const auto& v : g.vertices()) {
    auto n = a.base().at(v).size();
    if (n < spec.min_list) report.short_lists.emplace_back(v, n);
  }
  for (const auto& [e, pairs] : a.matchings()) {
    report.max_matching = std::max(report.max_matching, pairs.size());
    if (pairs.size() > spec.max_shared) report.heavy_matchings.emplace_back(e, pairs.size());
    std::set<Colour> left, right;
    for (const auto& [cu, cv] : pairs) {
      if (!a.base().at(e.u).contains(cu) || !a.base().at(e.v).contains(cv)) {
        report.malformed.emplace_back(e, "pair (" + cu.str() + "," + cv.str() + ") uses a colour outside the lists");
      }
      if (!left.insert(cu).second) report.malformed.emplace_back(e, "colour " + cu.str() + " matched twice at " + e.u.str());
      if (!right.insert(cv).second) report.malformed.emplace_back(e, "colour " + cv.str() + " matched twice at " + e.v.str());
    }
  }
  return report;
}

std::vector<Triangle> offensive_triangles(const PlaneGraph& g, const ListAssignment& lists) {
  require_cover(g, lists);
  std::vector<Triangle> out;
  for (const auto& t : enumerate_triangles(g)) {
    std::size_t common = 0;
    for (const auto& c : lists.at(t[0]))
      if (lists.at(t[1]).contains(c) && lists.at(t[2]).contains(c)) ++common;
    if (common == 2) out.push_back(t);
  }
  return out;
}

ListAssignment restrict(const ListAssignment& lists, const std::vector<ListEdit>& edits) {
  ListAssignment out = lists;
  for (const auto& edit : edits) {
    ColourSet colours = out.at(edit.vertex);
    if (edit.op == ListEdit::Op::Pin) {
      if (!colours.contains(edit.colour))
        throw Error(ErrorKind::PinNotInList, edit.colour.str() + " is not in the list of " + edit.vertex.str());
      out.set(edit.vertex, {edit.colour});
    } else {
      colours.erase(edit.colour);
      out.set(edit.vertex, std::move(colours));
    }
  }
  return out;
}

CorrespondenceAssignment identity_correspondence(const PlaneGraph& g, const ListAssignment& lists) {
  require_cover(g, lists);
  CorrespondenceAssignment out(lists);
  for (const auto& e : g.edges()) {
    Matching m;
    for (const auto& c : lists.at(e.u))
      if (lists.at(e.v).contains(c)) m.emplace(c, c);
    out.set_matching(e.u, e.v, m);
  }
  return out;
}

}  // namespace sepcol
