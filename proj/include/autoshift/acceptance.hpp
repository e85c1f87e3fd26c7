#pragma once

#include <iosfwd>

namespace autoshift {

/// Runs the full verification sweep, printing one PASS/FAIL line per
/// criterion. Returns true iff every criterion passed.
bool run_acceptance(std::ostream& out);

}  // namespace autoshift
