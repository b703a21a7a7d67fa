#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chaoscrypt/lattice_maps.hpp"

namespace chaoscrypt {

// Exit codes: 0 success, 1 usage error, 2 data error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

MapKey parse_map_key(MapKind kind, const std::string& text);

}  // namespace chaoscrypt
