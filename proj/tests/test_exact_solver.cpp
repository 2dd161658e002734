#include <doctest.h>

#include "sepcol/error.hpp"
#include "sepcol/gadgets.hpp"
#include "sepcol/generators.hpp"
#include "support.hpp"

using namespace sepcol;
using namespace testkit;

namespace {

PlaneGraph edge_uv() { return drawn({{"u", {0, 0}}, {"v", {1, 0}}}, {{"u", "v"}}); }

PlaneGraph tri() { return drawn({{"x", {0, 0}}, {"y", {2, 0}}, {"z", {1, 2}}}, {{"x", "y"}, {"y", "z"}, {"z", "x"}}); }

// Gadget with v1, v2 pinned to a = 7, b = 11 (their lists are already singletons).
GadgetInstance pinned_h() { return build_gadget_h("7"_c, "11"_c); }

}  // namespace

TEST_SUITE("exact solver") {
  TEST_CASE("check under list and correspondence semantics") {
    ListAssignment l({{"x"_v, cs({"1"})}, {"y"_v, cs({"2"})}, {"z"_v, cs({"3"})}});
    CHECK(check(tri(), l, {{"x"_v, "1"_c}, {"y"_v, "2"_c}, {"z"_v, "3"_c}}).proper);

    CorrespondenceAssignment same(ListAssignment({{"u"_v, cs({"1"})}, {"v"_v, cs({"1"})}}));
    same.add_pair("u"_v, "1"_c, "v"_v, "1"_c);
    auto bad = check(edge_uv(), same, {{"u"_v, "1"_c}, {"v"_v, "1"_c}});
    CHECK_FALSE(bad.proper);
    CHECK(bad.violated_edges == std::vector<Edge>{Edge("u"_v, "v"_v)});

    CorrespondenceAssignment cross(ListAssignment({{"u"_v, cs({"1"})}, {"v"_v, cs({"1", "2"})}}));
    cross.add_pair("u"_v, "1"_c, "v"_v, "2"_c);
    CHECK(check(edge_uv(), cross, {{"u"_v, "1"_c}, {"v"_v, "1"_c}}).proper);

    try {
      (void)check(tri(), l, {{"x"_v, "1"_c}});
      FAIL("expected PartialColouring");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PartialColouring);
    }
  }

  TEST_CASE("list solving") {
    const PlaneGraph k = k4();
    ListAssignment four;
    for (const auto& v : k.vertices()) four.set(v, cs({"1", "2", "3", "4"}));
    auto r = solve_list(k, four);
    REQUIRE(r.status == SearchStatus::Colourable);
    CHECK(check(k, four, *r.witness).proper);

    ListAssignment three;
    for (const auto& v : k.vertices()) three.set(v, cs({"1", "2", "3"}));
    CHECK(solve_list(k, three).status == SearchStatus::NotColourable);

    PlaneGraph v = PlaneGraph::build({"v"_v}, {});
    auto one = solve_list(v, ListAssignment({{"v"_v, cs({"1"})}}));
    REQUIRE(one.witness);
    CHECK(*one.witness == Colouring{{"v"_v, "1"_c}});

    CHECK_THROWS_AS((void)solve_list(v, ListAssignment{}), Error);
  }

  TEST_CASE("empty list means not colourable") {
    PlaneGraph v = PlaneGraph::build({"v"_v}, {});
    CHECK(solve_list(v, ListAssignment({{"v"_v, ColourSet{}}})).status == SearchStatus::NotColourable);
  }

  TEST_CASE("node budget is reported, never mistaken for a verdict") {
    GadgetInstance g = build_counterexample_g42();
    auto r = solve_corr(g.graph, g.assignment, SolveOptions{5});
    CHECK(r.status == SearchStatus::BudgetExceeded);
    CHECK_FALSE(r.witness);
  }

  TEST_CASE("gadget H pinned has no correspondence colouring") {
    GadgetInstance h = pinned_h();
    CHECK(solve_corr(h.graph, h.assignment).status == SearchStatus::NotColourable);
    CHECK(enumerate_corr(h.graph, h.assignment, 1u << 20).empty());
  }

  TEST_CASE("gadget H minus v5 is colourable") {
    GadgetInstance h = pinned_h();
    PlaneGraph g = remove(h.graph, "v5"_v);
    CorrespondenceAssignment a = h.assignment;
    a.base().erase("v5"_v);
    for (const auto& w : h.graph.neighbours("v5"_v)) a.erase_matching(Edge("v5"_v, w));
    auto r = solve_corr(g, a);
    REQUIRE(r.status == SearchStatus::Colourable);
    CHECK(check(g, a, *r.witness).proper);
    const auto all = enumerate_corr(g, a, 4096);
    CHECK(all.size() == brute_count(g, a.base(), [&](const Colouring& c) { return corr_proper(g, a, c); }));
    // v3 in {1,2}, v4 in {3,4}, and each of the pairs v6 v7 and v8 v9 has
    // three admissible colourings.
    CHECK(all.size() == 36);
    for (const auto& c : all) {
      CHECK((c.at("v3"_v) == "1"_c || c.at("v3"_v) == "2"_c));
      CHECK((c.at("v4"_v) == "3"_c || c.at("v4"_v) == "4"_c));
      CHECK((c.at("v6"_v) == "5"_c || c.at("v7"_v) == "5"_c));
      CHECK((c.at("v8"_v) == "6"_c || c.at("v9"_v) == "6"_c));
    }
    const bool both_five = std::any_of(all.begin(), all.end(), [](const Colouring& c) {
      return c.at("v6"_v) == "5"_c && c.at("v7"_v) == "5"_c;
    });
    CHECK(both_five);
  }

  TEST_CASE("triangle with empty matchings") {
    CorrespondenceAssignment a(ListAssignment({{"x"_v, cs({"1"})}, {"y"_v, cs({"1"})}, {"z"_v, cs({"1"})}}));
    CHECK(solve_corr(tri(), a).status == SearchStatus::Colourable);
  }

  TEST_CASE("enumeration order and limit") {
    CorrespondenceAssignment a(ListAssignment({{"u"_v, cs({"1", "2"})}, {"v"_v, cs({"1", "2"})}}));
    a.add_pair("u"_v, "1"_c, "v"_v, "1"_c);
    auto all = enumerate_corr(edge_uv(), a, 10);
    REQUIRE(all.size() == 3);
    CHECK(all[0] == Colouring{{"u"_v, "1"_c}, {"v"_v, "2"_c}});
    CHECK(all[1] == Colouring{{"u"_v, "2"_c}, {"v"_v, "1"_c}});
    CHECK(all[2] == Colouring{{"u"_v, "2"_c}, {"v"_v, "2"_c}});
    try {
      (void)enumerate_corr(edge_uv(), a, 2);
      FAIL("expected LimitExceeded");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::LimitExceeded);
    }

    PlaneGraph v = PlaneGraph::build({"v"_v}, {});
    CHECK(enumerate_list(v, ListAssignment({{"v"_v, cs({"1", "2"})}}), 10).size() == 2);
  }

  TEST_CASE("matchings on non-edges are rejected") {
    CorrespondenceAssignment a(ListAssignment({{"u"_v, cs({"1"})}, {"v"_v, cs({"1"})}, {"w"_v, cs({"1"})}}));
    a.add_pair("u"_v, "1"_c, "w"_v, "1"_c);
    PlaneGraph g = drawn({{"u", {0, 0}}, {"v", {1, 0}}, {"w", {2, 0}}}, {{"u", "v"}});
    try {
      (void)solve_corr(g, a);
      FAIL("expected MatchingOnNonEdge");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MatchingOnNonEdge);
    }
  }
}

TEST_SUITE("exact solver: properties") {
  TEST_CASE("agrees with full enumeration on small graphs") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
      PlaneGraph g = gen_random_plane(1 + seed % 8, seed, PlaneGenOptions{false, seed % 3});
      std::mt19937_64 rng(seed * 7919);
      ListAssignment l = small_lists(g, 3, 4, rng);
      auto r = solve_list(g, l);
      CAPTURE(seed);
      CHECK((r.status == SearchStatus::Colourable) == brute_list_colourable(g, l));
      if (r.witness) CHECK(check(g, l, *r.witness).proper);
      const auto counted = brute_count(g, l, [&](const Colouring& c) { return list_proper(g, c); });
      CHECK(enumerate_list(g, l, 1u << 20).size() == counted);
    }
  }

  TEST_CASE("enumeration is lexicographic in vertex then colour order") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      PlaneGraph g = gen_random_plane(2 + seed % 5, seed);
      std::mt19937_64 rng(seed);
      ListAssignment l = small_lists(g, 3, 4, rng);
      auto all = enumerate_list(g, l, 1u << 20);
      auto key = [&](const Colouring& c) {
        std::vector<Colour> k;
        for (const auto& v : g.vertices()) k.push_back(c.at(v));
        return k;
      };
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(key(all[i - 1]) < key(all[i]));
    }
  }

  TEST_CASE("solver is deterministic") {
    PlaneGraph g = gen_random_plane(12, 5);
    ListAssignment l = gen_random_assignment(g, {4, 2}, 10, 5);
    auto a = solve_list(g, l);
    auto b = solve_list(g, l);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes == b.nodes);
  }
}
