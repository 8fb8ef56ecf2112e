#ifndef ORBITALE_CLI_APP_HPP_
#define ORBITALE_CLI_APP_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbitale {

/// Bad flag values or a bad configuration file; exit code 2 like a parse
/// error.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Every flag of the command-line tool. A configuration file (--config)
/// holds the same keys as `key=value` lines; flags win over the file and
/// ORBITALE_PREC supplies the default of --prec.
struct RunConfig {
    std::uint32_t p = 3;
    std::int64_t d = 2;
    std::string alpha, beta;
    std::string f, g;       // polynomials (in x over F_p(t), or over F_p)
    std::string place;      // a single place
    std::string S;          // comma-separated places
    std::int64_t n_max = 8;
    std::int64_t n = 1;
    std::int64_t m = 2;
    std::string levels;     // "m:n,m:n,..."
    std::int64_t prec = 64;
    std::int64_t steps = 10;
    std::int64_t l = 2;
    std::string op;         // poly-arith operation
    std::string at;         // evaluation point for poly-arith eval
    std::string bound = "1";
    std::string r = "0";
    std::string x0;
    std::string output = "csv";
    std::uint64_t seed = 0;
    bool allow_wild = false;
    bool float_mode = false;

    /// Prime p; output csv|json; gcd(d, p) = 1 unless allow_wild, when the
    /// command iterates z^d.
    void validate(bool uses_map_degree) const;
};

struct CommandInfo {
    std::string name;       // subcommand
    std::string module;     // library module
    std::string operation;  // library operation it wraps
    std::string summary;    // one line, plus the CSV schema
    bool uses_map_degree = false;
};

/// The dispatch table, one entry per subcommand.
const std::vector<CommandInfo>& command_table();

/// Runs one command line (without the program name). Results go to `out`;
/// errors go to `err` as one JSON object. Returns 0 on success, 1 on a
/// precondition violation, 2 on a parse or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitale

#endif  // ORBITALE_CLI_APP_HPP_
