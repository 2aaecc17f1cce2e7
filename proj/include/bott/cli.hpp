#pragma once

#include "bott/bottcore.hpp"

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace bott::cli {

/// Exit codes: verdicts are data, only failures are nonzero.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitInputError = 2;

/// Report serialization with a fixed field order.
nlohmann::ordered_json to_json(const ManifoldReport& r);

/// Runs the command line `bott <args...>` (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bott::cli
