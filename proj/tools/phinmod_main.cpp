#include <iostream>

#include "phinmod/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return phinmod::run_cli(args, std::cout, std::cerr);
}
