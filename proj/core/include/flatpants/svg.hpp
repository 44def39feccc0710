#ifndef FLATPANTS_SVG_HPP
#define FLATPANTS_SVG_HPP

#include <string>

#include "flatpants/development.hpp"

namespace flatpants {

/// Renders the development as a standalone SVG 1.1 document. Output is
/// byte-identical for identical input: faces as closed paths, the two copies
/// of each cut in a shared per-index color, singularity copies as dots,
/// boundary components labeled c1..c3. Collapsed rectangles and their
/// zero-length cuts are omitted. The y axis is flipped for screen
/// coordinates; user units match the metric 1:1.
std::string emit_svg(const Development& d);

}  // namespace flatpants

#endif
