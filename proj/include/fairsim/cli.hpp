#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fairsim {

/// Full command-line front end, callable in-process for tests. Returns the
/// process exit code: 0 success, 1 configuration/usage error, 2 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fairsim
