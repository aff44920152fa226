#ifndef QPL_CLI_HPP
#define QPL_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qpl::cli {

enum class ExitStatus : int { ok = 0, verification_failure = 1, usage_error = 2 };

enum class Format { csv, json };

/// Parsed and validated command line. Fields not used by a subcommand keep
/// their defaults.
struct RunConfig {
    std::string subcommand; // figurate | partitions | divisors | verify | theta
    Format format = Format::csv; // verify defaults to json
    std::optional<std::string> output; // file path; stdout when empty
    bool check = false;

    std::int64_t k = 3;
    std::int64_t ell = 1;
    std::int64_t bound = 0; // figurate
    std::int64_t n = 0;     // partitions, divisors
    std::string method;     // oracle|gf|recursion or scan|recursion|kim

    // partitions
    std::string set;
    std::string mode = "unrestricted";
    int gamma = 1;
    std::int64_t d = 1;

    // verify
    std::string identity;
    bool all = false;
    std::int64_t k_min = 3, k_max = 6;
    std::int64_t order = 200;
    int sign = 1;
    std::int64_t s = 1;
    std::int64_t window = 8;
    std::int64_t k2 = 5, ell2 = 2;
    int gamma2 = 1;
    unsigned jobs = 1;

    // theta
    char variant = 'a';
    double q_re = 0.3, q_im = 0.0;
    double z_re = 1.0, z_im = 0.0;
    double tol = 1e-13;
    std::int64_t factors = 60;
};

struct ParseOutcome {
    std::optional<RunConfig> config; // empty after --help or a usage error
    ExitStatus status = ExitStatus::ok;
};

/// Parses argv-style arguments (without the program name). Usage errors go
/// to `err`, help text to `out`.
ParseOutcome parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes a config, writing data to `out` (or the configured file) and
/// diagnostics to `err`.
ExitStatus run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse + run.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qpl::cli

#endif
