// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "copo/cli.hpp"

int main(int argc, char** argv) {
    return copo::cli::run(argc, argv, std::cout, std::cerr);
}
