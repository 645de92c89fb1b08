#include <iostream>

#include "starq/cli.hpp"

int main(int argc, char** argv) {
    return starq::run_cli(argc, argv, std::cout, std::cerr);
}
