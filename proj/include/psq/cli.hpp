#ifndef PSQ_CLI_HPP
#define PSQ_CLI_HPP

#include <string>

#include "psq/common.hpp"

namespace psq::cli {

// One verification run: a command name plus the parameters its operation
// needs, validated against the operation's preconditions before dispatch.
struct RunConfig {
    std::string command;

    u64 N = 100;
    u64 w = 3;
    double A = 0.0;
    u64 Q = 3;
    u64 M = 32;
    int K = 2;
    u64 X = 100000;
    int t = 0;   // 0 runs the default grid {2, 4}
    u64 p = 0;   // 0 runs the default prime grid
    i64 c = 0;
    bool c_given = false;  // restrict verify-charsums to a single shift
    u64 seed = 1;
    u64 window = 1000;
    std::string backend = "both";  // oracle | convolution | both
    std::string strategy = "uniform-random";
    u64 qmax = 200;
    u64 points = 256;
    u64 count = 200;
    u64 size = 0;  // random subset size; 0 keeps the full set
    int k = 6;
    std::string kind = "grid";  // sweep flavour: grid | tu
    double phase = 0.3819660112501051;
    double D = 0.0;  // 0 derives D from the energy

    std::string out;  // empty writes to stdout
    std::string format = "default";  // json | csv | default per command
};

// Executes exactly one subcommand and writes its report.
// Exit status: 0 all assertions passed, 1 an assertion failed,
// 2 unknown command, 3 precondition violated.
int run(const RunConfig& config);

// Resolves an output path against the PSQ_OUT_DIR environment variable.
std::string resolve_output_path(const std::string& out);

}  // namespace psq::cli

#endif
