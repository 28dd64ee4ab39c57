#pragma once

#include <string>

#include "fcad/context.hpp"

namespace fcad {

// Burmeister .cxt reader. Accepts the common layout: a "B" line, an optional
// name line, object and attribute counts, a blank line, the object names,
// the attribute names, then one X/. row per object.
FormalContext read_cxt(const std::string& text);
FormalContext read_cxt_file(const std::string& path);

// Canonical writer: "B", empty name line, counts, blank line, names, rows.
// Always LF line endings, so output round-trips byte for byte.
std::string write_cxt(const FormalContext& ctx);
void write_cxt_file(const FormalContext& ctx, const std::string& path);

}  // namespace fcad
