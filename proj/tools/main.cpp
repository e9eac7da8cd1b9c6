// main.cpp - trigrid command-line entry point
#include <iostream>
#include <string>
#include <vector>

#include "trigrid/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return trigrid::cli::run(std::move(args), std::cout, std::cerr);
}
