#pragma once

/// Stable JSON encodings shared by the library, the CLI and the golden
/// files, plus the CLI partition string format "1,2|3,4|5".

#include <string>

#include <json.hpp>

#include "oncross/classify.hpp"
#include "oncross/l_section.hpp"
#include "oncross/oracle.hpp"
#include "oncross/phi.hpp"

namespace oncross {

using json = nlohmann::ordered_json;

json to_json(const Transformation& t);
Transformation transformation_from_json(const json& j);

json to_json(const CrossSection& s);
CrossSection cross_section_from_json(const json& j);

// {"n":5, "root":3, "nodes":{"3":{"son":1,"daughter":4}, ...}}; childless
// vertices are omitted.
json to_json(const OrderedTree& t);
OrderedTree tree_from_json(const json& j);

// Mirrors the tree format with pre-order vertex ids and a per-vertex
// "marking" interval when the tree is marked.
json to_json(const RespectfulTree& g);
RespectfulTree respectful_from_json(const json& j);

json to_json(const SearchReport& r);        // wall time excluded: output stays byte-stable
json to_json(const TheoremReport& r);
json to_json(const IsoVerdict& v);
json to_json(const std::vector<CountRow>& rows);

ConvexPartition partition_from_string(int n, const std::string& text);
std::string partition_to_string(const ConvexPartition& p);

json load_json_file(const std::string& path);

}  // namespace oncross
