#include <iostream>
#include <string>
#include <vector>

#include "qeuler/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return qeuler::run_cli(args, std::cout, std::cerr);
}
