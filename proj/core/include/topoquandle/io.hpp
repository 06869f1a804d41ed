#pragma once

// Serialization boundary. Two text formats plus JSON:
//
//  * quandle matrix text — n lines of n whitespace-separated labels, row i
//    column j holding x_i ◁ x_j. The ground and its order are recovered from
//    the diagonal (idempotency puts row i's label at position i). The printer
//    normalizes to single spaces and a trailing newline; parse∘print is the
//    identity on printed output.
//
//  * topology text — a first line listing the ground labels in order, then
//    one line "x ~ y" per adjacent pair inside each equivalence class and one
//    line "x < y" per covering pair between classes (class representatives =
//    least labels). Deterministic order; parse∘print is the identity.
//
//  * JSON — {"labels", "table"} for quandles, {"labels", "leq"} for
//    topologies, {"quandle", "topology"} for pairs, and an array of
//    {"coeff", "mode", "factors"} objects for formal sums.

#include <iosfwd>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "topoquandle/species.hpp"

namespace tq {

std::string print_quandle(const quandle& q);
quandle parse_quandle(const std::string& text);

std::string print_topology(const topology& t);
topology parse_topology(const std::string& text);

nlohmann::ordered_json to_json(const quandle& q);
nlohmann::ordered_json to_json(const topology& t);
nlohmann::ordered_json to_json(const topo_quandle& x);
nlohmann::ordered_json to_json(const tensor_word& w);
nlohmann::ordered_json to_json(const formal_sum& s);

quandle quandle_from_json(const nlohmann::json& j);
topology topology_from_json(const nlohmann::json& j);
topo_quandle topo_quandle_from_json(const nlohmann::json& j);
tensor_word tensor_word_from_json(const nlohmann::json& j);
formal_sum formal_sum_from_json(const nlohmann::json& j);

/// One-line rendering of a factor: "[rows ; ...]" for the operation table
/// with "{x<y, x~y, ...}" appended when the topology is not discrete.
std::string pretty(const topo_quandle& x);
/// Terms in canonical order, one per line, "<coeff> <factor> (x) <factor>".
std::string pretty(const formal_sum& s);

/// Any supported object parsed from file contents; format is "matrix",
/// "topology", or "json" (JSON objects are disambiguated by their keys).
using parsed_object = std::variant<quandle, topology, topo_quandle, formal_sum>;
parsed_object parse_object(const std::string& text, const std::string& format);

} // namespace tq
