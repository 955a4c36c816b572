// Acceptance suite: runs every criterion and prints one pass/fail line each.

#include <cstdlib>
#include <iostream>

#include "ospchar/verify.hpp"

int main(int argc, char** argv) {
    unsigned seed = argc > 1 ? (unsigned)std::strtoul(argv[1], nullptr, 10) : 1;
    bool ok = ospchar::verify::run_all(std::cout, seed);
    return ok ? 0 : 1;
}
