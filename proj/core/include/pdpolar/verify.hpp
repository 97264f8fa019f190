#pragma once

#include <iosfwd>

namespace pdpolar {

// Self-contained invariant battery behind `pdpolar verify`: polarization
// oracles, set-identity checks against a brute-force enumerator, rate
// monotonicity, bound ranges and Monte Carlo determinism. Prints one line
// per check; returns true iff everything passed.
bool run_verify(std::ostream& out);

}  // namespace pdpolar
