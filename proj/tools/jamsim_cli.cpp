// SPDX-License-Identifier: Apache-2.0
#include <string>
#include <vector>

#include "jamsim/harness.hpp"

int main(int argc, char** argv) {
    return jamsim::cli(std::vector<std::string>(argv + 1, argv + argc));
}
