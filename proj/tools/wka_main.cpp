#include <iostream>
#include <string>
#include <vector>

#include "wka/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wka::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}
