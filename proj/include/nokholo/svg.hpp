#ifndef NOKHOLO_SVG_HPP
#define NOKHOLO_SVG_HPP

/* Static SVG figures: 2D body polygons with the irrational vertex annotated
 * by its minimal polynomial, the slice region with its conic (or piecewise
 * linear) upper boundary, and the stacked 3D wireframe of slice bodies.
 * Coordinates are rendered from exact values at 12 significant digits.
 */

#include "nokholo/nok.hpp"

#include <string>
#include <vector>

namespace nokholo {

std::string body_svg(const NokBody& body, const std::string& title);

std::string slice_region_svg(const SliceRegion& region, const BoundaryVerdict& verdict,
                             const std::string& title);

std::string slice_stack_svg(const std::vector<std::pair<Rat, NokBody>>& bodies,
                            const std::string& title);

} // namespace nokholo

#endif
