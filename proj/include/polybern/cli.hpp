#ifndef POLYBERN_CLI_HPP
#define POLYBERN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include <polybern/identities.hpp>

namespace polybern::cli
{

// Exit codes of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

inline constexpr const char *sequence_ids[] = {"stirling1",       "stirling2",       "bernoulli", "genocchi",
                                               "polybernoulli-B", "polybernoulli-C", "scriptB"};

inline constexpr const char *gf_ids[] = {"egf-B", "egf-C", "egf-poly", "egf-scriptB", "ogf-f1", "g1", "beta1"};

// Runs the command line (args excludes the program name). The document goes
// to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

// JSON form of a report:
// {"identity", "params", "passed", "counterexample": null | {"at", "lhs", "rhs"}, "checked"}
nlohmann::ordered_json to_json(const verification_report &report);
nlohmann::ordered_json to_json(const verify_entry &entry);

} // namespace polybern::cli

#endif
