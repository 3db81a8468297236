#include <iostream>
#include <vector>

#include "dbcover/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dbcover::cli::run(args, std::cout, std::cerr);
}
