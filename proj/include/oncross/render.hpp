#pragma once

/// Deterministic text renderers: the unfolded grid diagram (columns are
/// labels, rows are levels), DOT output, arrow diagrams for transformations,
/// and the partition -> two-row transformation table of a phi semigroup.

#include <string>

#include "oncross/json_io.hpp"

namespace oncross {

std::string render_diagram(const OrderedTree& t);
std::string render_dot(const OrderedTree& t);

std::string render_arrows(const Transformation& t);
std::string render_arrows(const CrossSection& s);

std::string phi_table_text(const PhiSemigroup& sg);
json phi_table_json(const PhiSemigroup& sg);

std::string count_table_text(const std::vector<CountRow>& rows);

}  // namespace oncross
