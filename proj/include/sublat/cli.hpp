#ifndef SUBLAT_CLI_HPP
#define SUBLAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sublat {

/// Command-line dispatcher, also usable in-process by tests. `args`
/// excludes the program name. Reports are printed to `out` unless an
/// --out path redirects them; diagnostics go to `err`. Returns the exit
/// status: 0 success, 1 negative mathematical verdict, 2 input or usage
/// error, 3 internal invariant violation.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sublat

#endif
