#include <iostream>

#include "detskein/cli.hpp"

int main(int argc, char** argv) {
    return detskein::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
