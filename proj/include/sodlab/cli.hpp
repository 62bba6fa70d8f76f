#ifndef SODLAB_CLI_HPP
#define SODLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "sodlab/poly.hpp"

namespace sodlab {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitHypothesis = 2,
    kExitParse = 3,
    kExitUnsupported = 4,
};

/// Parses f over x1..xn, additionally accepting e1..en and p1..pn, which are
/// expanded to elementary symmetric and power sums in x.
QPoly parse_symmetric_input(const std::string& text, int n);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sodlab

#endif  // SODLAB_CLI_HPP
