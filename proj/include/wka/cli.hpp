#ifndef WKA_CLI_HPP
#define WKA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wka::cli {

/// Runs one command-line invocation (args without the program name) against
/// the given streams. Exit codes: 0 pass/true, 1 fail/false, 2 usage or
/// input errors.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace wka::cli

#endif
