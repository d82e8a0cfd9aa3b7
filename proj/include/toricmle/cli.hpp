#ifndef TORICMLE_CLI_HPP
#define TORICMLE_CLI_HPP

#include <string>
#include <vector>

namespace toricmle {

struct CliResult {
    int exit_code = 0;  // 0 success, 2 usage error, 3 computation failure
    std::string out;
    std::string err;
};

/// Run one CLI command (arguments without the program name). All output is
/// captured; identical arguments produce identical bytes.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace toricmle

#endif
