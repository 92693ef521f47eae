#pragma once

#include <string>
#include <string_view>

#include "slitsqueeze/geometry.hpp"

namespace slitsqueeze {

/// Reads {"holes": [{"center": [re, im], "radius": r}, ...]}.  Syntax errors
/// are reported as Error(ParseError) with line and column; geometry errors
/// keep their own kinds.
CircularDomain parse_domain(std::string_view text);
CircularDomain load_domain(const std::string& path);

/// Inverse of parse_domain, full double precision.
std::string domain_to_json(const CircularDomain& d);

}  // namespace slitsqueeze
