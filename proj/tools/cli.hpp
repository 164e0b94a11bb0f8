#pragma once

// Command-line front end. parse_command_line turns argv into a Command;
// run executes it against explicit output streams so it can be tested
// without a process boundary.

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "dihedral/modring.hpp"

namespace dihedral::cli {

enum class Format { Table, Json, Csv };

struct AutList {
    Int n;
    Int k;
};
struct Classes {
    Int n;
    Int k;
};
struct Spaces {
    Int n;
    std::string theta;
};
struct Orbits {
    Int n;
    std::string theta;
};
struct CountInvolutions {
    Int max_n;
    bool include_identity;
};
struct CountClasses {
    Int max_n;
};
struct Verify {
    Int max_n;
    Int max_k;
};
struct Infinite {
    Int b;
};

using Action = std::variant<AutList, Classes, Spaces, Orbits, CountInvolutions, CountClasses, Verify, Infinite>;

struct Command {
    Action action;
    Format format = Format::Table;
    std::optional<std::string> out_path;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Parse result: either a command or an exit code (help, usage error) with
/// the text already written to `out` / `err`.
std::variant<Command, int> parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace dihedral::cli
