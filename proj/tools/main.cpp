#include "wobbly/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) args.push_back("--help");
    return wobbly::cli::run(args, std::cout, std::cerr);
}
