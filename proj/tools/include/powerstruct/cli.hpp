#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace powerstruct::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on contract or guard violations and failed verifications, 2 on argument
/// and input errors. `in` serves file arguments given as "-".
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::istream &in);

} // namespace powerstruct::cli
