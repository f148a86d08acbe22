#pragma once

#include <optional>
#include <string>
#include <vector>

namespace accfn::cli {

/// Exit codes: 0 the command ran and any checked property holds (or the
/// command is informational), 1 the checked property fails, 2 bad input.
struct CommandResult {
    std::string text;
    std::optional<std::string> json;  // rendered payload, filled on success
    bool json_mode = false;
    int exit_code = 0;
};

CommandResult run(const std::vector<std::string>& args);

}  // namespace accfn::cli
