#include <iostream>
#include <string>
#include <vector>

#include "periparts/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return periparts::run_cli(args, std::cout, std::cerr);
}
