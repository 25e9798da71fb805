// Command-line front end.
//
//   idemgen SUBCOMMAND (--file PATH | --preset NAME) [options]
//
// Subcommands: validate classify closure complement decompose lift invert
// peirce iso check census build.  Exit codes: 0 for ok, absent, vacuous and
// confirmed; 1 for usage, parse and domain errors; 2 when a theorem check
// finds a violation.

#ifndef IDEMGEN_CLI_HPP_
#define IDEMGEN_CLI_HPP_

#include <string>
#include <vector>

#include "idemgen/report.hpp"

namespace idemgen {

  struct RunResult {
    int         exit_code;
    Report      report;
    std::string output;  // the emitted document, or help text
  };

  // args excludes the program name.
  RunResult run(std::vector<std::string> const& args);

  int exit_code_for(ReportVerdict v);

}  // namespace idemgen

#endif  // IDEMGEN_CLI_HPP_
