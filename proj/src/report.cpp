#include "idemgen/report.hpp"

#include <algorithm>

namespace idemgen {

  std::string_view to_string(ReportVerdict v) {
    switch (v) {
      case ReportVerdict::ok:
        return "ok";
      case ReportVerdict::absent:
        return "absent";
      case ReportVerdict::vacuous:
        return "vacuous";
      case ReportVerdict::confirmed:
        return "confirmed";
      case ReportVerdict::violation:
        return "violation";
      case ReportVerdict::error:
        return "error";
    }
    return "error";
  }

  json to_json(Report const& r) {
    json j;
    j["schema"]       = report_schema;
    j["tool_version"] = tool_version;
    j["command"]      = r.command;
    j["input"]        = r.input;
    j["verdict"]      = to_string(r.verdict);
    j["result"]       = r.result;
    j["error"]        = r.verdict == ReportVerdict::error ? json(r.error) : json(nullptr);
    return j;
  }

  namespace {

    std::string scalar(json const& v) {
      if (v.is_string()) {
        return v.get<std::string>();
      }
      if (v.is_null()) {
        return "none";
      }
      return v.dump();
    }

    bool is_flat(json const& v) {
      return !v.is_structured()
             || (v.is_array()
                 && std::none_of(v.begin(), v.end(), [](json const& e) { return e.is_structured(); }));
    }

    std::string flat(json const& v) {
      if (!v.is_array()) {
        return scalar(v);
      }
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : ", ") + scalar(v[i]);
      }
      return out + "]";
    }

    void render(std::string& out, json const& v, std::size_t indent) {
      std::string const pad(indent, ' ');
      if (v.is_object()) {
        for (auto const& [key, value] : v.items()) {
          if (is_flat(value) || value.empty()) {
            out += pad + key + ": " + (value.empty() && value.is_object() ? "{}" : flat(value)) + "\n";
          } else {
            out += pad + key + ":\n";
            render(out, value, indent + 2);
          }
        }
      } else if (v.is_array()) {
        for (auto const& e : v) {
          if (is_flat(e)) {
            out += pad + "- " + flat(e) + "\n";
          } else {
            out += pad + "-\n";
            render(out, e, indent + 2);
          }
        }
      } else {
        out += pad + scalar(v) + "\n";
      }
    }

  }  // namespace

  std::string emit_report(Report const& r, ReportFormat format) {
    if (format == ReportFormat::json) {
      return to_json(r).dump(2) + "\n";
    }
    std::string out = "command: " + r.command + "\n";
    if (!r.input.is_null()) {
      for (auto const& [key, value] : r.input.items()) {
        out += "input: " + key + " " + scalar(value) + "\n";
      }
    }
    out += "verdict: " + std::string(to_string(r.verdict)) + "\n";
    if (r.verdict == ReportVerdict::error) {
      out += "error: " + r.error + "\n";
    }
    if (!r.result.is_null()) {
      render(out, r.result, 0);
    }
    return out;
  }

}  // namespace idemgen
