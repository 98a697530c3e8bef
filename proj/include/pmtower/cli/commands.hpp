#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace pmtower::cli {

enum ExitCode : int { kOk = 0, kInconsistent = 1, kInputError = 2 };

// Writes <out>/tower.json; with geometry, also meshes/L<k>_C<i>.off for
// viewing and solids/L<k>_C<i>.tets.json, which the descriptor references.
int cmd_generate(const std::filesystem::path& spec, const std::filesystem::path& out,
                 std::optional<std::size_t> budget, std::ostream& stdout_, std::ostream& stderr_);

// Accepts a .tets.json solid, an .off surface or a tower descriptor.
int cmd_homology(const std::filesystem::path& input, std::ostream& stdout_, std::ostream& stderr_);

struct AnalyzeFlags {
    std::optional<std::size_t> declared_r;
    bool complement_nontrivial = false;
    std::optional<std::filesystem::path> rule;
};

int cmd_analyze(const std::filesystem::path& descriptor, const AnalyzeFlags& flags, std::ostream& stdout_,
                std::ostream& stderr_);

// Argument parsing and dispatch for the pmtower executable.
int run(int argc, const char* const* argv, std::ostream& stdout_, std::ostream& stderr_);

}  // namespace pmtower::cli
