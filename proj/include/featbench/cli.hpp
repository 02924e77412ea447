#pragma once

#include <string_view>

namespace featbench {

inline constexpr std::string_view kVersion = "0.1.0";

/// Entry point of the featbench tool. Exit codes: 0 success, 1
/// configuration or I/O error, 2 partial benchmark failure.
int run_cli(int argc, const char* const* argv);

}  // namespace featbench
