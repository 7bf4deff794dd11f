#ifndef NOKHOLO_JSON_IO_HPP
#define NOKHOLO_JSON_IO_HPP

/* Deterministic serialization of computation results: fixed key order,
 * canonical "p/q" rationals, exact surds with minimal polynomial, isolating
 * interval and a 12-digit decimal approximation. Byte-identical inputs give
 * byte-identical outputs.
 */

#include "nokholo/holonomic.hpp"
#include "nokholo/nok.hpp"
#include "nokholo/zariski.hpp"

#include <string>

namespace nokholo {

std::string surd_json_text(const Surd& v);

std::string zariski_json_text(const SurfaceData& s, const DivisorClass& b,
                              const ZariskiDecomposition& z);

std::string body_json_text(const SurfaceData& s, const DivisorClass& b, const FlagOnSurface& flag,
                           const NokBody& body);

std::string slice_json_text(const SurfaceData& s, const SliceRegion& region,
                            const BoundaryVerdict& verdict);

// Writes via a temp file in the same directory followed by a rename.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

} // namespace nokholo

#endif
