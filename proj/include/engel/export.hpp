// DOT and JSON serialisation of Engel graphs.
//
// JSON schema: {"schema": "engel-lab/1", "n": <vertices>, "directed": bool,
// "edges": [[i, j], ...], "labels": [...]}. Undirected edges have i < j; both
// edge and arc lists are sorted lexicographically.

#ifndef ENGEL_EXPORT_HPP_
#define ENGEL_EXPORT_HPP_

#include "engel/graph.hpp"

#include "json.hpp"

#include <string>

namespace engel {

inline constexpr char const* schema_version = "engel-lab/1";

std::string to_dot(SimpleGraph const& g, std::string const& name = "G");
std::string to_dot(DirectedGraph const& g, std::string const& name = "G");

nlohmann::json to_json(SimpleGraph const& g);
nlohmann::json to_json(DirectedGraph const& g);

}  // namespace engel

#endif  // ENGEL_EXPORT_HPP_
