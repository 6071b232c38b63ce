#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace recon::cli {

/// argv with every `key = value` line of the file named by `--config`
/// appended as `--key value`, unless `--key` already appears on the command
/// line. Blank lines and '#' comments are ignored. Throws
/// std::runtime_error naming the line of a malformed entry.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

/// "3..15", "3,5,7", "3..5,9" into an ascending list without duplicates.
std::vector<std::size_t> parse_size_list(std::string_view text);

/// "0.1,0.5,0.9" in the given order.
std::vector<double> parse_double_list(std::string_view text);

}  // namespace recon::cli
