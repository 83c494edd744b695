/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "commands.hh"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return containment::cli::run(args, std::cout, std::cerr);
}
