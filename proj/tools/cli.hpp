#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rlw::cli {

// Exit codes: 0 completed, 2 indeterminate (budget), 1 error or failed
// verification.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kIndeterminate = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlw::cli
