#include <iostream>
#include <string>
#include <vector>

#include "rhsinv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rhsinv::cli::run(args, std::cout, std::cerr);
}
