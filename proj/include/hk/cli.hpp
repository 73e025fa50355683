#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hk::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInputError = 2,
  kPrecondition = 3,
};

/// Runs one CLI invocation. `args` excludes the program name. Operands given
/// as `-` are read from `in`. `default_field` stands in for a missing
/// --field (the executable passes $HK_FIELD).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& default_field = std::nullopt);

}  // namespace hk::cli
