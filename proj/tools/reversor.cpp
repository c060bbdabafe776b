#include <reversor/cli.hpp>

#include <csignal>
#include <iostream>

namespace {

std::atomic<bool> g_cancel{false};

extern "C" void on_sigint(int) { g_cancel.store(true); }

} // namespace

int main(int argc, char **argv) {
    std::signal(SIGINT, on_sigint);
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto result = reversor::cli::run(args, &g_cancel);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
