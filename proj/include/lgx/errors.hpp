#pragma once

#include <stdexcept>
#include <string>

namespace lgx {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed graph/color/spec input files.
struct ParseError : Error {
    using Error::Error;
};

// A labeling spec that cannot be applied to the given graph
// (e.g. AL with D < d1+d2+1, infeasible ratio).
struct SpecError : Error {
    using Error::Error;
};

// Precondition violation on an oracle/labeling query (white_radius of a
// black node, stats over a map with blanks, ...).
struct DomainError : Error {
    using Error::Error;
};

// Robot sandbox violations: invalid port, set_color on a non-blank node,
// observing a closed session. These indicate bugs in exploration code,
// not robot behavior.
struct SandboxError : Error {
    using Error::Error;
};

// A metered procedure exceeded its analytic traversal budget.
struct BudgetError : Error {
    using Error::Error;
};

// A run exceeded the watchdog multiple of its analytic budget.
struct WatchdogError : Error {
    using Error::Error;
};

// Internal consistency failure (pigeonhole certificate mismatch,
// stage table hitting a forbidden cell, ...).
struct InternalError : Error {
    using Error::Error;
};

} // namespace lgx
