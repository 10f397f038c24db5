#pragma once

// Command dispatch for the nielsen tool, callable in-process by tests.

#include <iosfwd>
#include <string>
#include <vector>

#include "nielsen/invariants.hpp"

namespace nielsen::cli {

enum ExitCode { kOk = 0, kViolation = 1, kInputError = 2, kDataError = 3 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Witness {
    std::string label;
    Report report;
};

/// Witness pairs (*, f) for the inequivalences a: N^# vs N~, b: N~ vs N, c: N vs N^Z.
std::vector<Witness> witnesses(const TableSet& t, char claim);

/// Rows of the equivalence table for CP1 or RP2 over m in [lo, hi].
std::vector<EquivalenceVerdict> compare_surface(const TableSet& t, const std::string& surface, int lo, int hi);

}  // namespace nielsen::cli
