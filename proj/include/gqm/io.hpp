#pragma once

#include "gqm/sequences.hpp"
#include "gqm/space.hpp"
#include "gqm/topology.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace gqm::io {

/// Point text form: anything that parses as "p" or "p/q" is a rational
/// point, everything else is a symbolic label. Pairs are two-element JSON
/// arrays.
Point point_from_json(const nlohmann::json& j);
nlohmann::json point_to_json(const Point& p);

/// Space description: {"carrier": {...}, "rule": {...}}. Carrier kinds:
/// "finite" (points list), "line", "box" (lo, hi). Rule kinds: "table"
/// (row-major matrix of "p/q" strings), "piecewise" (r), "square-shift"
/// (offset), "shifted-quasi" (base "abs-diff" | "discrete" | table object,
/// shift), "product" (left, right as full space objects, no carrier).
GqmSpace space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const GqmSpace& s);

/// Sequence description: {"family": ...} with the family's rational
/// parameters; "table" carries a terms list (constant past the last entry)
/// and "pair" nests two descriptions under "first"/"second".
SeqSpec seq_from_json(const nlohmann::json& j);
nlohmann::json seq_to_json(const SeqSpec& q);

/// Base-family description for topology commands:
/// {"ground": [points], "base": [[points], ...]}.
struct BaseFamily {
    std::vector<Point> ground;
    std::vector<std::vector<Point>> base;
};
BaseFamily base_from_json(const nlohmann::json& j);

/// Map file: one "x y" pair per line, points in the text form above;
/// blank lines and lines starting with '#' are skipped.
std::vector<std::pair<Point, Point>> map_pairs_from_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

GqmSpace load_space(const std::string& path);
SeqSpec load_seq(const std::string& path);
BaseFamily load_base(const std::string& path);
std::vector<std::pair<Point, Point>> load_map_pairs(const std::string& path);

}  // namespace gqm::io
