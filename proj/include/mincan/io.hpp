#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mincan/group.hpp"

namespace mincan {

// Group files:
//
//   # comment
//   degree 6
//   (1,4)(2,3)(5,6)
//   (1,2,6)
//
// One generator per line in 1-based cycle notation. Errors name the line.

PermGroup parse_group(std::string_view text);
PermGroup read_group_file(const std::filesystem::path& path);
std::string format_group(const PermGroup& group);

}  // namespace mincan
