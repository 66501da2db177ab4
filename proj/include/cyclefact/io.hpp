#pragma once

/**
 * @file io.hpp
 * @brief Text, JSON and DOT formats.
 *
 *   cycles         "(1 5 6 8)"
 *   factorization  "(4 5)(2 3 5)(1 5 6 8)(6 7)", the empty product is ""
 *   multiset       "{(1 4 5),(1 3),(2 4)}"
 *   type vector    "a2=3,a3=1", zero is "0"
 *   tree JSON      {"root_child":["leaf","leaf","leaf"]}
 *   cactus JSON    {"n":5,"polygons":[[1,2],[1,4,5],[2,3]]}
 *
 * Printers emit exactly what the parsers accept, so print(parse(s)) == s for
 * every printed string.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyclefact/cactus.hpp"
#include "cyclefact/genfunc.hpp"
#include "cyclefact/perm_core.hpp"
#include "cyclefact/plane_tree.hpp"

namespace cyclefact {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

std::vector<Cycle> parse_cycles(std::string_view text);
/// `n` defaults to the largest point mentioned (1 for the empty product).
Factorization parse_factorization(std::string_view text, std::optional<int> n = std::nullopt);

std::vector<Cycle> parse_multiset(std::string_view text);
std::string format_multiset(std::span<const Cycle> cycles);

TypeVector parse_type_vector(std::string_view text);

nlohmann::json tree_to_json(const PlaneTree& tree);
PlaneTree tree_from_json(const nlohmann::json& json);

nlohmann::json cactus_to_json(const Cactus& cactus);
/// Throws NotArrangeable when the polygons do not form a valid cactus.
Cactus cactus_from_json(const nlohmann::json& json);

/// Undirected DOT graph; leaves carry their h/t labels, internal vertices
/// their degree.
std::string tree_to_dot(const PlaneTree& tree);
/// neato drawing with points 1..n counterclockwise on a circle and each
/// polygon as a closed chain of edges (a transposition gets two).
std::string cactus_to_dot(const Cactus& cactus);

nlohmann::json series_to_json(const MultiSeries& series);

}  // namespace cyclefact
