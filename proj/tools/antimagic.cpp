#include "commands.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto outcome = antimagic::cli::run(args, std::cin);
    std::cout << outcome.payload;
    if (!outcome.message.empty()) std::cerr << outcome.message << '\n';
    return outcome.exit_code;
}
