#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace aksw::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "aksw-report/1";

struct Assertion {
  std::string name;
  bool pass = false;
  Json witness;  // null when there is nothing to show
};

/// One suite's contribution: its assertions and exact result values.
struct Section {
  std::string name;
  std::vector<Assertion> assertions;
  Json results = Json::object();
  double seconds = 0;

  void check(std::string assertion, bool pass, Json witness = nullptr) {
    assertions.push_back({std::move(assertion), pass, std::move(witness)});
  }
};

struct Report {
  std::string command;
  Json config = Json::object();
  std::vector<Section> sections;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }

  /// Canonical document; durations appear only when `timings` is set, so
  /// two runs of the same configuration are byte-identical.
  std::string to_json(bool timings) const;
  /// One line per assertion plus a summary line.
  std::string to_text(bool timings) const;
};

}  // namespace aksw::cli
