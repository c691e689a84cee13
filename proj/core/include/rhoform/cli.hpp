#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rhoform {

/// Dispatches one CLI invocation (argv without the program name).
/// Exit codes: 0 ok, 1 domain error, 2 syntax/usage error. Domain and syntax
/// failures print machine-readable error JSON on `out`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rhoform
