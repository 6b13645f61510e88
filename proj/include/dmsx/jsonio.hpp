#pragma once

#include <string>

#include "dmsx/surface.hpp"
#include "dmsx/walk.hpp"

namespace dmsx {

// Structured-text surface files. Top-level keys: "name", "arcs", "polygons"
// (each with "sides" and "corner_degrees"). Round-trips bit-exactly.
std::string surfaceToJson(const SurfaceSpec& spec);
SurfaceSpec surfaceFromJson(const std::string& text);

// Curve files: "start", "end", "passages" (array of {"arc", "slot"} where
// "slot" is the entered occurrence index), "sweeps", "chi0" = [z, x].
std::string curveToJson(const Surface& s, const CurveWalk& w);
CurveWalk curveFromJson(const Surface& s, const std::string& text);

}  // namespace dmsx
