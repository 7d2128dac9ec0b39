#include <iostream>
#include <vector>

#include "svf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return svf::cli::run(args, std::cout, std::cerr);
}
