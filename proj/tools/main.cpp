#include <iostream>
#include <vector>

#include "sbinv/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return sbinv::cli::run(args, std::cout, std::cerr);
}
