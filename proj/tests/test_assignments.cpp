#include <doctest.h>

#include "sepcol/error.hpp"
#include "sepcol/gadgets.hpp"
#include "sepcol/generators.hpp"
#include "support.hpp"

using namespace sepcol;
using namespace testkit;

namespace {

PlaneGraph single(const char* name) { return PlaneGraph::build({Vertex(name)}, {}); }

PlaneGraph edge_uv() { return drawn({{"u", {0, 0}}, {"v", {1, 0}}}, {{"u", "v"}}); }

PlaneGraph tri() { return drawn({{"x", {0, 0}}, {"y", {2, 0}}, {"z", {1, 2}}}, {{"x", "y"}, {"y", "z"}, {"z", "x"}}); }

}  // namespace

TEST_SUITE("assignments") {
  TEST_CASE("list profile") {
    ListAssignment one({{"v"_v, cs({"1", "2", "3", "4"})}});
    CHECK(validate_list_profile(single("v"), one, {4, 2}).valid());

    ListAssignment same({{"u"_v, cs({"1", "2", "3", "4"})}, {"v"_v, cs({"1", "2", "3", "4"})}});
    auto r = validate_list_profile(edge_uv(), same, {4, 2});
    CHECK_FALSE(r.valid());
    REQUIRE(r.heavy_edges.size() == 1);
    CHECK(r.heavy_edges[0].second == 4);
    CHECK(r.max_intersection == 4);

    ListAssignment short_list({{"u"_v, cs({"1"})}, {"v"_v, cs({"2", "3", "4", "5"})}});
    auto s = validate_list_profile(edge_uv(), short_list, {4, 2});
    REQUIRE(s.short_lists.size() == 1);
    CHECK(s.short_lists[0].first == "u"_v);

    CHECK_THROWS_AS((void)validate_list_profile(edge_uv(), one, {4, 2}), Error);
  }

  TEST_CASE("correspondence profile") {
    ListAssignment lists({{"u"_v, cs({"1", "2", "3"})}, {"v"_v, cs({"1", "2", "3"})}});
    CorrespondenceAssignment a(lists);
    a.set_matching("u"_v, "v"_v, {{"1"_c, "1"_c}, {"2"_c, "2"_c}, {"3"_c, "3"_c}});
    auto r = validate_corr_profile(edge_uv(), a, {1, 2});
    CHECK_FALSE(r.valid());
    CHECK(r.heavy_matchings.size() == 1);

    CorrespondenceAssignment m(lists);
    m.set_matching("u"_v, "v"_v, {{"1"_c, "1"_c}, {"1"_c, "2"_c}});
    auto mr = validate_corr_profile(edge_uv(), m, {1, 2});
    CHECK_FALSE(mr.valid());
    CHECK(mr.malformed.size() == 1);

    CorrespondenceAssignment off(ListAssignment({{"u"_v, cs({"1"})}, {"v"_v, cs({"1"})}, {"w"_v, cs({"1"})}}));
    off.add_pair("u"_v, "1"_c, "w"_v, "1"_c);
    PlaneGraph g = drawn({{"u", {0, 0}}, {"v", {1, 0}}, {"w", {2, 0}}}, {{"u", "v"}});
    try {
      (void)validate_corr_profile(g, off, {1, 1});
      FAIL("expected MatchingOnNonEdge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MatchingOnNonEdge);
    }
  }

  TEST_CASE("matchings are stored once and read in either direction") {
    CorrespondenceAssignment a(ListAssignment({{"u"_v, cs({"1", "2"})}, {"v"_v, cs({"3", "4"})}}));
    a.add_pair("v"_v, "3"_c, "u"_v, "1"_c);
    CHECK(a.matching("u"_v, "v"_v) == Matching{{"1"_c, "3"_c}});
    CHECK(a.matching("v"_v, "u"_v) == Matching{{"3"_c, "1"_c}});
    CHECK(a.forbids("u"_v, "1"_c, "v"_v, "3"_c));
    CHECK(a.forbids("v"_v, "3"_c, "u"_v, "1"_c));
    CHECK_FALSE(a.forbids("u"_v, "3"_c, "v"_v, "1"_c));
    CHECK(a.matchings().size() == 1);
  }

  TEST_CASE("offensive triangles") {
    ListAssignment off({{"x"_v, cs({"1", "2", "3", "4"})}, {"y"_v, cs({"1", "2", "5", "6"})}, {"z"_v, cs({"1", "2", "7", "8"})}});
    CHECK(offensive_triangles(tri(), off) == std::vector<Triangle>{{"x"_v, "y"_v, "z"_v}});
    ListAssignment fine({{"x"_v, cs({"1", "2", "3", "4"})}, {"y"_v, cs({"1", "3", "5", "6"})}, {"z"_v, cs({"2", "3", "7", "8"})}});
    CHECK(offensive_triangles(tri(), fine).empty());

    PlaneGraph c = cycle(6);
    ListAssignment all;
    for (const auto& v : c.vertices()) all.set(v, cs({"1", "2"}));
    CHECK(offensive_triangles(c, all).empty());
  }

  TEST_CASE("restrict") {
    ListAssignment l({{"v"_v, cs({"1", "2", "5"})}, {"w"_v, cs({"5"})}});
    CHECK(restrict(l, {ListEdit::pin("v"_v, "1"_c)}).at("v"_v) == cs({"1"}));
    auto emptied = restrict(l, {ListEdit::remove("w"_v, "5"_c)});
    CHECK(emptied.at("w"_v).empty());
    CHECK(emptied.empty_lists() == std::vector<Vertex>{"w"_v});
    CHECK(restrict(l, {ListEdit::remove("v"_v, "9"_c)}) == l);
    try {
      (void)restrict(l, {ListEdit::pin("v"_v, "9"_c)});
      FAIL("expected PinNotInList");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PinNotInList);
    }
  }

  TEST_CASE("identity correspondence") {
    ListAssignment l({{"u"_v, cs({"1", "2"})}, {"v"_v, cs({"2", "3"})}});
    CHECK(identity_correspondence(edge_uv(), l).matching("u"_v, "v"_v) == Matching{{"2"_c, "2"_c}});
    ListAssignment d({{"u"_v, cs({"1"})}, {"v"_v, cs({"2"})}});
    CHECK(identity_correspondence(edge_uv(), d).matching("u"_v, "v"_v).empty());
    ListAssignment k3({{"x"_v, cs({"1", "2", "3"})}, {"y"_v, cs({"1", "2", "3"})}, {"z"_v, cs({"1", "2", "3"})}});
    const CorrespondenceAssignment ik3 = identity_correspondence(tri(), k3);
    CHECK(ik3.matchings().size() == 3);
    for (const auto& [e, m] : ik3.matchings()) CHECK(m.size() == 3);
  }

  TEST_CASE("sixteen-copy lists: (4,3) valid with a maximum intersection of 3") {
    GadgetInstance g = build_counterexample_g42();
    auto r = validate_list_profile(g.graph, g.assignment.base(), {4, 3});
    CHECK(r.valid());
    CHECK(r.max_intersection == 3);
    auto c = validate_corr_profile(g.graph, g.assignment, {4, 2});
    CHECK(c.valid());
    CHECK(c.max_matching == 2);
    const auto& copy = g.copies.front();
    CHECK(shared_colours(g.assignment.base().at(copy.roles.at("v3")), g.assignment.base().at(copy.roles.at("v8"))) == 3);
  }
}

TEST_SUITE("assignments: properties") {
  TEST_CASE("offensive triangles are triangles with a two-colour common core") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
      PlaneGraph g = gen_random_plane(3 + seed % 12, seed);
      std::mt19937_64 rng(seed);
      ListAssignment l = small_lists(g, 4, 6, rng);
      auto off = offensive_triangles(g, l);
      auto all = brute_triangles(g);
      std::vector<Triangle> expected;
      for (const auto& t : all) {
        std::size_t common = 0;
        for (const auto& c : l.at(t[0])) common += l.at(t[1]).contains(c) && l.at(t[2]).contains(c);
        if (common == 2) expected.push_back(t);
      }
      CAPTURE(seed);
      CHECK(off == expected);
    }
  }

  TEST_CASE("removing colours from a (l,2)-valid assignment never adds offensive triangles") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      PlaneGraph g = gen_random_plane(4 + seed % 15, seed);
      ListAssignment l = gen_random_assignment(g, {4, 2}, 12, seed);
      auto before = offensive_triangles(g, l);
      std::mt19937_64 rng(seed);
      std::vector<ListEdit> edits;
      for (const auto& v : g.vertices()) {
        const auto& list = l.at(v);
        auto it = list.begin();
        std::advance(it, std::uniform_int_distribution<std::size_t>(0, list.size() - 1)(rng));
        edits.push_back(ListEdit::remove(v, *it));
      }
      auto after = offensive_triangles(g, restrict(l, edits));
      CAPTURE(seed);
      for (const auto& t : after) CHECK(std::find(before.begin(), before.end(), t) != before.end());
      CHECK(validate_list_profile(g, restrict(l, edits), {3, 2}).heavy_edges.empty());
    }
  }
}
