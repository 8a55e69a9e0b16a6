#pragma once

#include <string>

#include "webweave/bijection.hpp"
#include "webweave/web.hpp"

namespace webweave {

/// Boundary circle with numbered boundary dots (filled black, outlined white)
/// and internal vertices placed by barycentric relaxation. Throws
/// PreconditionError if the web fails validation.
std::string render_web_svg(const Web& w);

/// Boundary circle with the 2n points joined by chords.
std::string render_matching_svg(const Matching& m);

/// Points 1..3k on a line, arcs drawn as semicircles above it, crossings marked.
std::string render_mdiagram_svg(const ArcDiagram& d);

}  // namespace webweave
