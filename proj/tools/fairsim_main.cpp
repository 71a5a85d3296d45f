#include <iostream>
#include <string>
#include <vector>

#include "fairsim/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fairsim::run_cli(args, std::cout, std::cerr);
}
