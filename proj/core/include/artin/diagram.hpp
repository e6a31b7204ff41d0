#pragma once

#include "artin/twist.hpp"

#include <string>

namespace artin {

// Schematic SVG of a framed twist tree: chords as vertical lines with their
// framing integers underneath, blocks as nested rectangles labeled with
// their exponents. Throws std::invalid_argument on an invalid tree.
std::string render_svg(const FramedTwistTree& ft);

} // namespace artin
