#include <iostream>
#include <string>
#include <vector>

#include "alliance/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return alliance::cli::run(std::move(args), std::cout, std::cerr);
}
