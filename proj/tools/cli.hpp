#pragma once

#include <iosfwd>

namespace monotile::cli {

/// Entry point of the `monotile` tool: 0 on success, 1 when a verification
/// or computation fails, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monotile::cli
