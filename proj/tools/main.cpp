#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    accfn::cli::CommandResult result = accfn::cli::run(args);
    if (result.exit_code == 2) {
        std::cerr << result.text;
    } else if (result.json_mode && result.json) {
        std::cout << *result.json << "\n";
    } else {
        std::cout << result.text;
    }
    return result.exit_code;
}
