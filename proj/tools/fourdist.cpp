#include <iostream>
#include <string>
#include <vector>

#include "fourdist/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return fourdist::run_cli(args, std::cout, std::cerr);
}
