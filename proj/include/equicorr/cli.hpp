#ifndef EQUICORR_CLI_HPP
#define EQUICORR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace equicorr {

/// Runs one CLI invocation (arguments without the program name) against the
/// given streams. Exit codes: 0 success or verified match, 1 failure or table
/// mismatch, 2 usage error, 3 resource-guard refusal, 75 when the hidden
/// abort-after-shards hook stopped a checkpointed run.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace equicorr

#endif  // EQUICORR_CLI_HPP
