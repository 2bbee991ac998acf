#include <iostream>
#include <string>
#include <vector>

#include "spreadlab/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto outcome = spreadlab::run_cli(args);
    std::cout << outcome.report;
    std::cerr << outcome.message;
    return outcome.exit_code;
}
