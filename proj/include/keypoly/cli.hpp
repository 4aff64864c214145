#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace keypoly::cli {

// Runs the command line tool. args excludes the program name. Exit codes:
// 0 success, 2 argument parse error, 3 input validation or limit error,
// 4 internal invariant breach (including route disagreement, which dumps a
// machine readable counterexample to err).
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

} // namespace keypoly::cli
