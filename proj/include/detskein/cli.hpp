#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace detskein {

// Runs one command line (without the program name). Returns 0 on success, 1
// on malformed input or a domain error, 2 when a certificate is rejected.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace detskein
