// Structured command output.
//
// Every command produces a Report with the same top-level keys:
//
//   schema        integer, bumped on incompatible changes
//   tool_version  string
//   command       subcommand name
//   input         {"preset": NAME} or {"file": PATH}, null when there is none
//   verdict       ok | absent | vacuous | confirmed | violation | error
//   result        command-specific payload, null on error
//   error         message, null unless verdict is error
//
// JSON output is byte-reproducible for identical inputs.  The text rendering
// is for people and may change.

#ifndef IDEMGEN_REPORT_HPP_
#define IDEMGEN_REPORT_HPP_

#include <string>
#include <string_view>

#include <json.hpp>

namespace idemgen {

  inline constexpr int              report_schema = 1;
  inline constexpr std::string_view tool_version  = "0.1.0";

  using json = nlohmann::ordered_json;

  enum class ReportVerdict { ok, absent, vacuous, confirmed, violation, error };

  std::string_view to_string(ReportVerdict v);

  struct Report {
    std::string   command;
    json          input;
    ReportVerdict verdict = ReportVerdict::ok;
    json          result;
    std::string   error;
  };

  enum class ReportFormat { text, json };

  json        to_json(Report const& r);
  std::string emit_report(Report const& r, ReportFormat format);

}  // namespace idemgen

#endif  // IDEMGEN_REPORT_HPP_
