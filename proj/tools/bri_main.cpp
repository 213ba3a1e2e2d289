#include <iostream>

#include "bri/version.hpp"

int main(int argc, char** argv) {
    (void)argc;
    (void)argv;
    std::cout << "bri " << bri::kVersion << "\n";
    return 0;
}
