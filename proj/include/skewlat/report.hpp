#ifndef SKEWLAT_REPORT_HPP_
#define SKEWLAT_REPORT_HPP_

#include <string>

#include "skewlat/harness.hpp"

namespace skewlat {

// Structured summary of one algebra: properties, class structure, ideal
// counts, coset indices, and the proposition battery outcome. The JSON form
// is key-sorted and byte-stable for identical inputs.
std::string info_report_json(const SkewLatticeAlgebra& s);
std::string info_report_text(const SkewLatticeAlgebra& s);

std::string check_report_json(const SkewLatticeAlgebra& s);
std::string check_report_text(const SkewLatticeAlgebra& s);

}  // namespace skewlat

#endif  // SKEWLAT_REPORT_HPP_
