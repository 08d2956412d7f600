#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace carlitz::cli {

struct RunConfig {
  std::string command;            // ctx | hankel | jacobi | poly | spectrum | verify
  std::vector<double> k_values;
  std::vector<std::string> tags;  // resolved tag names; "all" already expanded
  std::size_t truncation = 64;
  std::size_t m_max = 8;
  double tol = 1e-8;
  std::string format = "json";    // json | csv
  std::string out;                // empty: standard output
};

// Parses argv into a config.  Throws std::invalid_argument with a usage
// message on bad flags or values.
RunConfig parse(int argc, const char* const* argv);

// Executes the command, writing the artifact to `out` and diagnostics to
// `err`.  Returns the process exit status: 0 on success, 1 when a
// computation or verification fails.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Convenience wrapper used by main(): parse + run + exit-code mapping
// (2 on usage errors).
int main_entry(int argc, const char* const* argv);

}  // namespace carlitz::cli
