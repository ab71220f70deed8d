#pragma once

#include <array>
#include <string>
#include <vector>

namespace knots {

/// Planar diagram code: each crossing is a 4-tuple of arc labels listed
/// counterclockwise starting at the incoming under-strand.  Zero-crossing
/// components are carried separately as a count of free loops.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;

  bool operator==(const PDCode&) const = default;
};

/// Parse the text grammar: whitespace-separated `X[a,b,c,d]` tokens,
/// `O` tokens for free loops, `#` starts a comment running to end of line.
PDCode parse_pd_text(const std::string& text);

std::string pd_to_text(const PDCode& pd);

}  // namespace knots
