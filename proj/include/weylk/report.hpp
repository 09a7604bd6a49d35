#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "weylk/exact_linalg.hpp"

namespace weylk::report {

// Default nlohmann json keeps object keys sorted, which together with dump(2)
// makes every emitted document byte-identical across runs of the same config.
using Json = nlohmann::json;

// Display string for a cyclotomic multiset in the e(k/n) = exp(k pi i / n)
// shorthand: "1,1,-1,e(1/3),e(5/3)" style, one entry per eigenvalue.
std::string spectrum_display(const std::vector<std::pair<int, int>>& cyclotomic);

// "T^d x C_a x C_b" display of a fixed set from its dimension and non-unit
// invariant factors; "1" for the trivial group.
std::string fixed_set_display(int torus_dim, const std::vector<exact_linalg::Int>& factors);

Json rational_json(const exact_linalg::Rat& q);          // canonical "num/den" string
Json rational_vector_json(const exact_linalg::RatVector& v);
Json int_matrix_json(const exact_linalg::IntMatrix& m);  // nested arrays of strings

std::string to_json_text(const Json& doc);
std::string to_csv_text(const Json& doc);      // flattens doc["rows"]
std::string to_markdown_text(const Json& doc); // dispatch on doc["command"]

// format is one of "json", "md", "csv" (validated by the CLI layer).
std::string render(const Json& doc, const std::string& format);

} // namespace weylk::report
