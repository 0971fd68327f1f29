#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lieord {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUnavailable = 2;
inline constexpr int kDataMissing = 3;
inline constexpr int kUsage = 64;
}  // namespace exit_code

// args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lieord
