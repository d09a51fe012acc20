#pragma once

#include <iosfwd>

namespace pdc::cli {

/// Runs one `pd` subcommand. Exit status: 0 success, 1 domain error,
/// 2 usage or syntax error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pdc::cli
