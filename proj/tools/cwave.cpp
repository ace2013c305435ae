#include <iostream>

#include "cwave/cli.hpp"

int main(int argc, char** argv) {
    return cwave::cli::run(argc, argv, std::cout, std::cerr);
}
