#include <iostream>

#include "posgames/cli.hpp"

int main(int argc, char** argv) {
    return posgames::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
