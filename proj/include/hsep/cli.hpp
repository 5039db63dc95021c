#pragma once

// The sepkit command line, callable in-process so the golden corpus can drive it.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace hsep::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kInputError = 2, kUndecided = 3 };

/// The default enumeration cap; SEPKIT_CAP overrides it, --cap overrides both.
inline constexpr std::size_t kDefaultCliCap = 1'000'000;

/// args excludes the program name. Reports go to out (or --output), errors to
/// err as a single "Kind: locus" line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsep::cli
