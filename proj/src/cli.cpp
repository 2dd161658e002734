#include "sepcol/cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "sepcol/constructive.hpp"
#include "sepcol/error.hpp"
#include "sepcol/gadgets.hpp"
#include "sepcol/generators.hpp"
#include "sepcol/io.hpp"

namespace sepcol {

namespace {

SeparationSpec parse_spec(const std::string& text) {
  auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const auto l = std::stoul(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(text);
    const auto k = std::stoul(text.substr(comma + 1), &used);
    if (used != text.size() - comma - 1) throw std::invalid_argument(text);
    return SeparationSpec{l, k};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::BadParameters, "spec must look like l,k (got \"" + text + "\")");
  }
}

Json spec_json(SeparationSpec s) { return Json::array({s.min_list, s.max_shared}); }

std::string edge_key(const Edge& e) { return e.u.str() + "|" + e.v.str(); }

Json stats_json(const ExtensionStats& s) {
  Json j;
  j["calls"] = s.calls;
  j["max_depth"] = s.max_depth;
  j["base_cases"] = s.base_cases;
  j["component_splits"] = s.component_splits;
  j["pins_added"] = s.pins_added;
  j["cut_vertex_splits"] = s.cut_vertex_splits;
  j["chord_splits"] = s.chord_splits;
  j["edge_drops"] = s.edge_drops;
  j["v2_reductions"] = s.v2_reductions;
  j["v3_reductions"] = s.v3_reductions;
  j["pair_reductions"] = s.pair_reductions;
  j["trimmed_colours"] = s.trimmed_colours;
  return j;
}

Json vertices_json(const std::vector<Vertex>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(v.str());
  return arr;
}

int error_exit(ErrorKind kind) { return kind == ErrorKind::VerificationFailed ? kExitNegative : kExitUsage; }

struct Options {
  std::string bundle;
  std::string spec;
  bool exact = false;
  bool constructive = false;
  bool auto_clique = false;
  std::vector<std::string> clique;
  std::uint64_t budget = 0;
  std::string which;
  std::string a = "7";
  std::string b = "11";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  bool triangle_free = false;
  std::size_t deletions = 0;
  std::size_t palette = 12;
  bool forbid_offensive = false;
};

int cmd_validate(const Options& o, std::ostream& out) {
  const InstanceBundle b = read_bundle(o.bundle);
  const SeparationSpec spec = !o.spec.empty() ? parse_spec(o.spec) : b.spec.value_or(SeparationSpec{});
  Json j;
  j["spec"] = spec_json(spec);
  bool valid = false;
  if (b.correspondence) {
    auto r = validate_corr_profile(b.graph, *b.correspondence, spec);
    valid = r.valid();
    j["kind"] = "correspondence";
    j["short_lists"] = Json::array();
    for (const auto& [v, n] : r.short_lists) j["short_lists"].push_back({{"vertex", v.str()}, {"size", n}});
    j["heavy_matchings"] = Json::array();
    for (const auto& [e, n] : r.heavy_matchings) j["heavy_matchings"].push_back({{"edge", edge_key(e)}, {"size", n}});
    j["malformed"] = Json::array();
    for (const auto& [e, why] : r.malformed) j["malformed"].push_back({{"edge", edge_key(e)}, {"reason", why}});
    j["max_matching"] = r.max_matching;
  } else {
    auto r = validate_list_profile(b.graph, b.lists, spec);
    valid = r.valid();
    j["kind"] = "list";
    j["short_lists"] = Json::array();
    for (const auto& [v, n] : r.short_lists) j["short_lists"].push_back({{"vertex", v.str()}, {"size", n}});
    j["heavy_edges"] = Json::array();
    for (const auto& [e, n] : r.heavy_edges) j["heavy_edges"].push_back({{"edge", edge_key(e)}, {"shared", n}});
    j["max_intersection"] = r.max_intersection;
  }
  j["valid"] = valid;
  out << j.dump(2) << '\n';
  return valid ? kExitOk : kExitNegative;
}

int cmd_solve_exact(const InstanceBundle& b, const Options& o, std::ostream& out) {
  const SolveOptions opts{o.budget};
  const SearchOutcome r = b.correspondence ? solve_corr(b.graph, *b.correspondence, opts)
                                           : solve_list(b.graph, b.lists, opts);
  Json j;
  j["status"] = to_string(r.status);
  j["semantics"] = b.correspondence ? "correspondence" : "list";
  j["nodes"] = r.nodes;
  if (r.witness) j["colouring"] = colouring_to_json(*r.witness);
  out << j.dump(2) << '\n';
  switch (r.status) {
    case SearchStatus::Colourable: return kExitOk;
    case SearchStatus::NotColourable: return kExitNegative;
    case SearchStatus::BudgetExceeded: return kExitUsage;
  }
  return kExitUsage;
}

int cmd_solve_constructive(const InstanceBundle& b, const Options& o, std::ostream& out) {
  if (b.correspondence)
    throw Error(ErrorKind::BadParameters, "the constructive solver works with list assignments only");
  ExtensionStats stats;
  Json j;
  Colouring colouring;
  if (!o.clique.empty()) {
    HittingClique h;
    for (const auto& v : o.clique) h.vertices.emplace_back(v);
    colouring = colour_with_clique(b.graph, b.lists, h, &stats);
    j["method"] = "clique";
    j["clique"] = vertices_json(h.vertices);
  } else if (offensive_triangles(b.graph, b.lists).empty()) {
    colouring = colour_no_offensive(b.graph, b.lists, &stats);
    j["method"] = "no-offensive";
  } else if (o.auto_clique) {
    auto h = find_hitting_clique(b.graph, b.lists);
    if (!h) throw Error(ErrorKind::HypothesisViolated, "no clique meets every offensive triangle");
    colouring = colour_with_clique(b.graph, b.lists, *h, &stats);
    j["method"] = "clique";
    j["clique"] = vertices_json(h->vertices);
  } else {
    throw Error(ErrorKind::HypothesisViolated,
                "offensive triangles present; pass --clique or --auto-clique");
  }
  j["status"] = to_string(SearchStatus::Colourable);
  j["colouring"] = colouring_to_json(colouring);
  j["stats"] = stats_json(stats);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_extend(const Options& o, std::ostream& out) {
  const InstanceBundle b = read_bundle(o.bundle);
  ExtensionInstance inst{b.graph, b.path.value_or(PrecolouredPath{}), b.lists};
  ExtensionStats stats;
  Colouring colouring = extend_precoloured(inst, &stats);
  Json j;
  j["status"] = to_string(SearchStatus::Colourable);
  j["colouring"] = colouring_to_json(colouring);
  j["stats"] = stats_json(stats);
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_offensive(const Options& o, std::ostream& out) {
  const InstanceBundle b = read_bundle(o.bundle);
  Json j;
  j["offensive"] = Json::array();
  for (const auto& t : offensive_triangles(b.graph, b.lists))
    j["offensive"].push_back(Json::array({t[0].str(), t[1].str(), t[2].str()}));
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_hitting_clique(const Options& o, std::ostream& out) {
  const InstanceBundle b = read_bundle(o.bundle);
  auto h = find_hitting_clique(b.graph, b.lists);
  Json j;
  j["clique"] = h ? vertices_json(h->vertices) : Json(nullptr);
  out << j.dump(2) << '\n';
  return h ? kExitOk : kExitNegative;
}

int cmd_gadget(const Options& o, std::ostream& out) {
  GadgetInstance g = o.which == "h" ? build_gadget_h(Colour(o.a), Colour(o.b)) : build_counterexample_g42();
  InstanceBundle b{g.graph, g.assignment.base(), g.assignment, SeparationSpec{4, 2}, std::nullopt};
  out << bundle_to_json(b).dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const GadgetInstance g = build_counterexample_g42();
  Json j;
  if (o.which == "g42") {
    const CounterexampleReport r = verify_counterexample(g);
    j["entries"] = Json::array();
    for (const auto& e : r.entries) {
      j["entries"].push_back({{"u1", e.c1.str()},
                              {"u2", e.c2.str()},
                              {"copy", e.copy},
                              {"free_vertices", e.free_vertices},
                              {"search_space", e.search_space},
                              {"colourings", e.colourings}});
    }
    j["whole_graph"] = {{"status", to_string(r.whole_graph)}, {"nodes", r.whole_graph_nodes}};
  } else {
    const Not43Report r = verify_not_43_choosable(g);
    j["max_intersection"] = r.max_intersection;
    j["list_profile_valid"] = r.list_profile_valid;
    j["identity_submatching"] = r.identity_submatching;
    j["list_status"] = to_string(r.list_status);
    j["nodes"] = r.nodes;
  }
  j["verified"] = true;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const SeparationSpec spec = o.spec.empty() ? SeparationSpec{} : parse_spec(o.spec);
  PlaneGraph g = gen_random_plane(o.n, o.seed, PlaneGenOptions{o.triangle_free, o.deletions});
  ListAssignment lists = gen_random_assignment(g, spec, o.palette, o.seed, AssignmentGenOptions{o.forbid_offensive});
  InstanceBundle b{std::move(g), std::move(lists), std::nullopt, spec, std::nullopt};
  out << bundle_to_json(b).dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Choosability with separation on plane graphs", "sepcol"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check the (l,k) profile of an instance");
  validate->add_option("bundle", o.bundle, "Instance file")->required();
  validate->add_option("--spec", o.spec, "l,k (defaults to the instance's, else 4,2)");

  auto* solve = app.add_subcommand("solve", "Colour an instance");
  solve->add_option("bundle", o.bundle, "Instance file")->required();
  auto* exact = solve->add_flag("--exact", o.exact, "Exhaustive search (list or correspondence)");
  auto* constructive = solve->add_flag("--constructive", o.constructive, "Inductive algorithm (lists only)");
  exact->excludes(constructive);
  solve->add_option("--clique", o.clique, "Clique meeting every offensive triangle, comma separated")
      ->delimiter(',');
  solve->add_flag("--auto-clique", o.auto_clique, "Search for such a clique when none is given");
  solve->add_option("--budget", o.budget, "Node budget for --exact (0 = unlimited)");

  auto* extend = app.add_subcommand("extend", "Extend the instance's precoloured path");
  extend->add_option("bundle", o.bundle, "Instance file")->required();

  auto* offensive = app.add_subcommand("offensive", "List offensive triangles");
  offensive->add_option("bundle", o.bundle, "Instance file")->required();

  auto* hitting = app.add_subcommand("hitting-clique", "Find a clique meeting every offensive triangle");
  hitting->add_option("bundle", o.bundle, "Instance file")->required();

  auto* gadget = app.add_subcommand("gadget", "Emit the gadget (h) or the 16-copy counterexample (g42)");
  gadget->add_option("which", o.which)->required()->check(CLI::IsMember({"h", "g42"}));
  gadget->add_option("--a", o.a, "Colour of v1 for h");
  gadget->add_option("--b", o.b, "Colour of v2 for h");

  auto* verify = app.add_subcommand("verify", "Verify the counterexample (g42) or its list version (g43)");
  verify->add_option("which", o.which)->required()->check(CLI::IsMember({"g42", "g43"}));

  auto* gen = app.add_subcommand("gen", "Random plane graph with a random list assignment");
  gen->add_option("--n", o.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", o.seed, "Random seed")->required();
  gen->add_flag("--triangle-free", o.triangle_free);
  gen->add_option("--deletions", o.deletions, "Random edge deletions after insertion");
  gen->add_option("--palette", o.palette, "Palette size");
  gen->add_option("--spec", o.spec, "l,k (default 4,2)");
  gen->add_flag("--forbid-offensive", o.forbid_offensive);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*solve) {
      if (o.exact == o.constructive) {
        err << "solve: pass exactly one of --exact and --constructive\n";
        return kExitUsage;
      }
      const InstanceBundle b = read_bundle(o.bundle);
      return o.exact ? cmd_solve_exact(b, o, out) : cmd_solve_constructive(b, o, out);
    }
    if (*extend) return cmd_extend(o, out);
    if (*offensive) return cmd_offensive(o, out);
    if (*hitting) return cmd_hitting_clique(o, out);
    if (*gadget) return cmd_gadget(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*gen) return cmd_gen(o, out);
  } catch (const Error& e) {
    Json j;
    j["error"] = std::string(to_string(e.kind()));
    j["message"] = e.what();
    out << j.dump(2) << '\n';
    err << e.what() << '\n';
    return error_exit(e.kind());
  }
  return kExitUsage;
}

}  // namespace sepcol
