#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cyq::cli {

inline constexpr int schema_version = 1;

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 1;
inline constexpr int exit_resource = 2;
inline constexpr int exit_internal = 3;

// args excludes the program name. JSON goes to `out`, messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256_hex(std::string_view bytes);

} // namespace cyq::cli
