#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ansig::cli {

/// Published exit codes.
enum Exit : int {
    ok = 0,
    verify_failed = 1,
    not_potential = 2,
    non_actual = 3,
    unresolved = 4,
    usage = 64,
    bad_input = 65,
    infeasible = 66,
};

/// Runs the an-sig command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ansig::cli
