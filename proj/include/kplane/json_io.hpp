#pragma once

#include <string>

#include "kplane/drawing.hpp"

namespace kplane {

// JSON text for a drawing: readable summary fields (vertices, crossings,
// rotations, budgets) plus the raw structural arrays needed to rebuild the
// exact drawing, reduced ones included.
std::string drawing_to_json(const Drawing& d);

// Rebuilds a drawing written by drawing_to_json.  Throws std::runtime_error
// on malformed input.
Drawing drawing_from_json(const std::string& text);

// 64-bit FNV-1a of a string as 16 hex digits; stable file names for keys.
std::string key_hash(const std::string& key);

// Graphviz text of the planarization: vertices as circles labeled with their
// ids, crossings as points, bends and hubs marked by shape.
std::string drawing_to_dot(const Drawing& d);

}  // namespace kplane
