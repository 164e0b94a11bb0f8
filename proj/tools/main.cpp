#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    using namespace dihedral::cli;
    auto parsed = parse_command_line(argc, argv, std::cout, std::cerr);
    if (auto* code = std::get_if<int>(&parsed)) return *code;
    return run(std::get<Command>(parsed), std::cout, std::cerr);
}
