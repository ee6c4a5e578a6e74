#ifndef CAYLEYPAIR_COMMANDS_HPP_
#define CAYLEYPAIR_COMMANDS_HPP_

#include <ostream>
#include <set>
#include <string>

#include "cayleypair/cayley.hpp"
#include "json.hpp"

namespace cayleypair {

inline constexpr const char* kReportSchemaVersion = "cayleypair-report/1";
inline constexpr int kDefaultCharpolyDegreeCap = 5;
inline constexpr int kDefaultTrunc = 10;

enum ExitCode { kExitOk = 0, kExitVerificationFailed = 1, kExitInvalidInput = 2, kExitResourceCap = 3 };

struct RunConfig {
  int a = 1;
  int b = 0;
  int T = -1;  // -1: 2 * max diameter + 4
  int trunc = kDefaultTrunc;
  std::string output_dir;  // empty: write reports to the given stream
  std::set<std::string> formats{"json"};
  int cap_elements = kDefaultElementCap;
  int cap_charpoly_n = kDefaultCharpolyDegreeCap;
  std::string gens1;  // walk only: cycle-notation sets separated by ';'
  std::string gens2;
};

// Each command writes its report to `out` (or files under output_dir) and
// returns an ExitCode. Exceptions from the library propagate; run_command
// maps them to exit codes.
int cmd_pair(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_walk(const RunConfig& cfg, std::ostream& out);
int cmd_spectra(const RunConfig& cfg, std::ostream& out);
int cmd_export(const RunConfig& cfg, std::ostream& out);

// Runs `command` by name, printing errors to `err`.
int run_command(const std::string& command, const RunConfig& cfg, std::ostream& out, std::ostream& err);

// "(1,2);(2,3);()" -> three permutations of the given degree.
std::vector<Permutation> parse_generator_list(const std::string& text, int degree);

nlohmann::json report_header(const std::string& command, const RunConfig& cfg);

}  // namespace cayleypair

#endif  // CAYLEYPAIR_COMMANDS_HPP_
