#include <iostream>
#include <string>
#include <vector>

#include "gnb/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gnb::run_cli(args, std::cout, std::cerr);
}
