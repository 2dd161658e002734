#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "sepcol/assignments.hpp"
#include "sepcol/exact_solver.hpp"
#include "sepcol/plane_graph.hpp"

namespace sepcol {

using Json = nlohmann::ordered_json;

/// Everything an instance file can carry. `lists` is the correspondence base
/// when a correspondence is present.
struct InstanceBundle {
  PlaneGraph graph;
  ListAssignment lists;
  std::optional<CorrespondenceAssignment> correspondence;
  std::optional<SeparationSpec> spec;
  std::optional<PrecolouredPath> path;
};

// Parsers throw ParseError naming the offending JSON pointer, and
// ConsistencyError when the parts do not fit together.

[[nodiscard]] Json parse_json(const std::string& text, const std::string& source);
[[nodiscard]] Json read_json_file(const std::filesystem::path& file);

/// {"vertices": [...], "rotation": {"v": [...]}, "outer": [...]}. "outer" is a
/// vertex walk, or an array of walks when several components have edges.
[[nodiscard]] Json graph_to_json(const PlaneGraph& g);
[[nodiscard]] PlaneGraph graph_from_json(const Json& j);

/// {"v": ["1", "2", ...]}
[[nodiscard]] Json lists_to_json(const ListAssignment& lists);
[[nodiscard]] ListAssignment lists_from_json(const Json& j);

/// {"u|v": [["cu", "cv"], ...]} with u < v.
[[nodiscard]] Json matchings_to_json(const CorrespondenceAssignment& a);
[[nodiscard]] CorrespondenceAssignment correspondence_from_json(const Json& j, const ListAssignment& base);

[[nodiscard]] Json colouring_to_json(const Colouring& c);
[[nodiscard]] Colouring colouring_from_json(const Json& j);

[[nodiscard]] Json path_to_json(const PrecolouredPath& p);
[[nodiscard]] PrecolouredPath path_from_json(const Json& j);

/// {"graph", "lists", "correspondence"?, "spec"?: [l, k], "path"?}. The graph,
/// lists and correspondence may be given inline or as file names relative to
/// `base_dir`.
[[nodiscard]] InstanceBundle bundle_from_json(const Json& j, const std::filesystem::path& base_dir = {});
[[nodiscard]] Json bundle_to_json(const InstanceBundle& b);
[[nodiscard]] InstanceBundle read_bundle(const std::filesystem::path& file);

/// Throws ConsistencyError for lists on unknown vertices, vertices without a
/// list and matchings on non-edges.
void check_consistency(const InstanceBundle& b);

}  // namespace sepcol
