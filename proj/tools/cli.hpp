#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdiv::cli {

// Exit codes: 0 ok, 2 bad arguments, 3 a checked identity failed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string csv_field(const std::string& s);

}  // namespace qdiv::cli
