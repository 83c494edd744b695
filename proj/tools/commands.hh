/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef CONTAINMENT_TOOLS_COMMANDS_HH
#define CONTAINMENT_TOOLS_COMMANDS_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace containment::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_negative = 1;
    inline constexpr int exit_usage = 2;

    /// Runs the command line; args excludes the program name. Returns the exit code.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
