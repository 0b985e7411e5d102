#include <iostream>
#include <string>
#include <vector>

#include "srho/cli.hpp"

int main(int argc, char** argv) {
    return srho::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
