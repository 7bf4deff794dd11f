#include "nokholo/report.hpp"

#include <sstream>

namespace nokholo {

static std::string html_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string report_html(const std::vector<ReportExhibit>& exhibits) {
  std::ostringstream os;
  os << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
     << "<title>boundary shape vs. holonomicity</title>\n"
     << "<style>\n"
     << "body { font-family: Georgia, serif; max-width: 72em; margin: 2em auto; }\n"
     << "h2 { border-bottom: 1px solid #999; }\n"
     << ".pair { display: flex; gap: 2em; flex-wrap: wrap; }\n"
     << ".card { border: 1px solid #ccc; padding: 1em; flex: 1 1 24em; }\n"
     << ".verdict { font-family: monospace; font-size: 1.1em; font-weight: bold; }\n"
     << ".conic { color: #a50f15; }\n"
     << ".linear { color: #08519c; }\n"
     << ".holo { color: #006d2c; }\n"
     << "pre { background: #f6f6f6; padding: 0.6em; overflow-x: auto; }\n"
     << "</style>\n</head>\n<body>\n";
  os << "<h1>Boundary shape of the Newton&ndash;Okounkov slice vs. holonomicity of the "
        "complexity function</h1>\n";

  for (const ReportExhibit& ex : exhibits) {
    os << "<h2>" << html_escape(ex.title) << "</h2>\n";
    os << "<p>" << html_escape(ex.divisor_line) << "</p>\n";
    os << "<div class=\"pair\">\n";

    os << "<div class=\"card\">\n<h3>Slice boundary</h3>\n";
    const bool conic = ex.verdict.kind == BoundaryKind::NONDEGENERATE_CONIC;
    os << "<p class=\"verdict " << (conic ? "conic" : "linear") << "\">"
       << (conic ? "NONDEGENERATE_CONIC" : "PIECEWISE_LINEAR") << "</p>\n";
    os << "<p>Q(s,t) = <code>" << html_escape(ex.region.boundary.str()) << "</code></p>\n";
    if (conic) {
      os << "<p>det of the symmetric matrix: <code>" << rat_str(ex.verdict.determinant)
         << "</code> (nonzero: the boundary arc lies on an irreducible conic, so the slice "
            "is not a polygon).</p>\n";
    } else {
      os << "<p>The boundary arc lies on " << ex.verdict.lines.size()
         << " affine line(s); the slice region is polyhedral.</p>\n";
    }
    os << "<p>Exact boundary samples (s, t):</p>\n<pre>";
    for (const SliceSample& smp : ex.region.samples)
      os << "(" << rat_str(smp.s) << ", " << html_escape(smp.mu.str()) << ")\n";
    os << "</pre>\n</div>\n";

    os << "<div class=\"card\">\n<h3>Complexity function</h3>\n";
    const bool holo = ex.certificate.verdict == CertVerdict::CERTIFIED_HOLONOMIC;
    os << "<p class=\"verdict holo\">" << (holo ? "CERTIFIED_HOLONOMIC" : "NO_FIT_FOUND")
       << "</p>\n";
    if (!ex.certificate_label.empty()) os << "<p>" << html_escape(ex.certificate_label) << "</p>\n";
    if (holo) {
      os << "<p>Closed form: <code>" << html_escape(ex.certificate.closed_form())
         << "</code></p>\n";
      os << "<p>q-operator: d<sup>" << ex.certificate.q_operator_order << "</sup>/dq<sup>"
         << ex.certificate.q_operator_order
         << "</sup>; x-operator of order " << ex.certificate.x_operator.order
         << " verified as a symbolic polynomial identity; holdout "
         << ex.certificate.holdout << ".</p>\n";
    }
    os << "</div>\n</div>\n";

    for (const std::string& svg : ex.svgs) os << "<div>\n" << svg << "</div>\n";
  }

  os << "</body>\n</html>\n";
  return os.str();
}

} // namespace nokholo
