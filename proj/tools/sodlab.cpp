#include <iostream>

#include "sodlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sodlab::run(args, std::cout, std::cerr);
}
