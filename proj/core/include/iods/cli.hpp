#ifndef IODS_CLI_HPP
#define IODS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace iods {

/// Command line front end.
///
///   solve <file> [--format text|structured] [--eps E] [--reduction R]
///                [--max-evals M] [--init V,..] [--step V,..] [--out PATH]
///   check <file>
///   membership <file> [--samples K] [--out PATH]
///
/// Exit codes: 0 on success with all slices converged, 2 on parse or
/// validation errors (including malformed overrides and unreadable files),
/// 3 when any slice exhausted its evaluation budget (results are still
/// written).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace iods

#endif // IODS_CLI_HPP
