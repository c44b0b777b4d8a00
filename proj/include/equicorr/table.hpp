#ifndef EQUICORR_TABLE_HPP
#define EQUICORR_TABLE_HPP

#include <map>
#include <string>

#include "equicorr/search.hpp"

namespace equicorr {

/// Published volume distributions for binary lengths 1 through 44. Blank
/// rows (unequivocal lengths) hold the empty string. Lengths 35 and up are
/// beyond what this library can recompute (the key packing stops at 34);
/// they are kept for reference.
const std::map<int, std::string>& known_table();

/// "c1 [v1] + c2 [v2] + ..." with volumes ascending; empty string when there
/// are no nontrivial classes. Matches the published notation so table rows
/// diff textually.
std::string render_distribution(const VolumeDistribution& dist);

}  // namespace equicorr

#endif  // EQUICORR_TABLE_HPP
