#pragma once

#include <atomic>
#include <string>
#include <vector>

namespace reversor::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kDomain = 2,
    kViolation = 3,
};

struct CommandResult {
    int exit_code = kOk;
    std::string out; // text or JSON document
    std::string err;
};

/// Runs one command line. `args` excludes the program name. `cancel` lets
/// scan and sweep stop between chunks.
CommandResult run(const std::vector<std::string> &args, const std::atomic<bool> *cancel = nullptr);

} // namespace reversor::cli
