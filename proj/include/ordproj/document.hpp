#pragma once

#include <string>

#include "json.hpp"
#include "ordproj/element.hpp"

namespace ordproj {

using json = nlohmann::json;

/// {"model": [d_1, ..], "shape": [m, n], "blocks": [[[re, im], ..], ..]}
/// with each block stored row-major.
json element_to_document(const Element& v);

/// Throws ParseError for malformed documents and non-finite entries,
/// ShapeError when the entry counts disagree with model and shape.
Element element_from_document(const json& doc, const TolerancePolicy& tol = {});

/// Reads and parses a file; ParseError on unreadable or invalid JSON.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

}  // namespace ordproj
