#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kal1::cli {

/**
* Entry point of the kal1 tool; args[0] is the program name. Errors are reported on err with a first line
* "error: <exit code> <name>"; exit codes are 2 format, 3 range, 4 decoding,
* 5 KAT mismatch, 64 usage, 1 anything else.
*/
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kal1::cli
