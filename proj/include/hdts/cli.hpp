#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdts {

/// Runs one command; args exclude the program name. Returns 0 on success,
/// 1 for a negative verdict and 2 for usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdts
