#pragma once

#include <cstdint>
#include <ostream>

namespace trop {

// Runs the built-in self-check suites and writes a line-per-suite report.
// The report depends only on the seed — no timestamps, no pointers, no
// unordered iteration — so identical seeds produce byte-identical output.
// Returns true when every suite passed.
bool run_verify(std::uint64_t seed, std::ostream& out);

}  // namespace trop
