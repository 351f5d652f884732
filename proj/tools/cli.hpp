#pragma once

#include <iosfwd>

namespace qaw::cli {

/// Entry point behind the qaw binary. Returns 0 when every record passes,
/// 1 on a verification failure and 2 on usage or configuration errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qaw::cli
