#ifndef NOKHOLO_REPORT_HPP
#define NOKHOLO_REPORT_HPP

/* Single-page HTML bundle placing the boundary verdict of a slice family
 * next to the holonomicity certificate of the matching complexity function.
 */

#include "nokholo/holonomic.hpp"
#include "nokholo/nok.hpp"

#include <string>
#include <vector>

namespace nokholo {

struct ReportExhibit {
  std::string title;
  std::string divisor_line; // which divisor both certificates talk about
  SurfaceData surface;
  SliceRegion region;
  BoundaryVerdict verdict;
  HolonomicCertificate certificate;
  std::string certificate_label;
  std::vector<std::string> svgs; // inlined figures
};

std::string report_html(const std::vector<ReportExhibit>& exhibits);

} // namespace nokholo

#endif
