#include "signed_inertia/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return signed_inertia::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
