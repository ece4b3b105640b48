#include <iostream>

#include "qpknot/cli.hpp"

int main(int argc, char** argv) {
    return qpk::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
