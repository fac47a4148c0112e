#pragma once

// SVG pictures of walks in rank 1 and 2.  The apartment is drawn with a
// W-invariant metric, hyperplanes as lines, alcoves as triangles (strips in
// rank 1), crossings as arrows between alcove centres and foldings as cusps
// touching the wall.  Positive steps are blue, negative steps red.

#include <string>

#include "hecke_walks/walks.hpp"

namespace hw {

struct SvgOptions {
  double scale = 80.0;   // pixels per unit of the normalised metric
  double margin = 1.0;   // extra room around the walk, same units
};

/// Throws std::invalid_argument for rank > 2.
std::string render_svg(const AffineWeylGroup& g, const Walk& walk, const SvgOptions& opt = {});

}  // namespace hw
