#include "report.hpp"

#include <cmath>
#include <sstream>

namespace aksw::cli {

std::size_t Report::passed() const {
  std::size_t k = 0;
  for (const auto& s : sections)
    for (const auto& a : s.assertions) k += a.pass ? 1 : 0;
  return k;
}

std::size_t Report::failed() const {
  std::size_t k = 0;
  for (const auto& s : sections)
    for (const auto& a : s.assertions) k += a.pass ? 0 : 1;
  return k;
}

std::string Report::to_json(bool timings) const {
  Json doc;
  doc["schema"] = kSchema;
  doc["tool"] = {{"name", "aksw"}, {"version", AKSW_VERSION}};
  doc["command"] = command;
  doc["config"] = config;
  Json secs = Json::array();
  for (const auto& s : sections) {
    Json j;
    j["name"] = s.name;
    if (timings) j["duration_ms"] = std::llround(s.seconds * 1000.0);
    Json as = Json::array();
    for (const auto& a : s.assertions) {
      Json x;
      x["name"] = a.name;
      x["status"] = a.pass ? "pass" : "fail";
      if (!a.witness.is_null()) x["witness"] = a.witness;
      as.push_back(std::move(x));
    }
    j["assertions"] = std::move(as);
    j["results"] = s.results;
    secs.push_back(std::move(j));
  }
  doc["sections"] = std::move(secs);
  doc["summary"] = {{"passed", passed()}, {"failed", failed()}, {"status", ok() ? "pass" : "fail"}};
  return doc.dump(2) + "\n";
}

std::string Report::to_text(bool timings) const {
  std::ostringstream os;
  os << "aksw " << AKSW_VERSION << " " << command << "\n";
  for (const auto& s : sections) {
    os << "[" << s.name << "]";
    if (timings) os << " " << std::llround(s.seconds * 1000.0) << " ms";
    os << "\n";
    for (const auto& a : s.assertions) {
      os << (a.pass ? "  PASS " : "  FAIL ") << a.name;
      if (!a.pass && !a.witness.is_null()) os << "  " << a.witness.dump();
      os << "\n";
    }
  }
  os << (ok() ? "PASS" : "FAIL") << " " << passed() << " passed, " << failed() << " failed\n";
  return os.str();
}

}  // namespace aksw::cli
