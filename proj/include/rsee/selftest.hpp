#pragma once

#include <iosfwd>

namespace rsee {

// Quick end-to-end battery: field axioms, the interpolation identity, decoding
// inside the radius, and agreement with the brute-force oracle. Prints one
// "ok"/"FAIL" line per check; returns true when all pass.
bool run_selftest(std::ostream& out);

}  // namespace rsee
