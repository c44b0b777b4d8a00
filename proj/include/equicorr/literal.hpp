#ifndef EQUICORR_LITERAL_HPP
#define EQUICORR_LITERAL_HPP

#include <string>
#include <string_view>

#include "equicorr/seq.hpp"

namespace equicorr {

/// Parses a sequence literal: either the compact binary form over {+,-}
/// ("++-+-") or comma-separated integers ("1,1,-1,2"), with an optional "@k"
/// suffix setting the offset (default 0).  "0" denotes the zero sequence.
/// Throws std::invalid_argument on malformed input.
IntLaurentSeq parse_sequence(std::string_view text);

/// Renders f so that parse_sequence(format_sequence(f)) == f.  Sequences with
/// every coefficient +1/-1 use the compact binary form.
std::string format_sequence(const IntLaurentSeq& f);

/// Debug rendering "c0 + c1 z + ... + ck z^k" of the coefficient list
/// (offset ignored).
std::string poly_debug_string(const IntLaurentSeq& f);

}  // namespace equicorr

#endif
