// Command-line driver: machine-readable reports on stdout, summaries on stderr.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phinmod {

/// Exit codes: 0 affirmative/success, 1 well-formed negative answer, 2 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phinmod
