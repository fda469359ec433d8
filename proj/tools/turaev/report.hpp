#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "turaev/certify.hpp"

namespace turaev::cli {

using Json = nlohmann::ordered_json;

/// Command echo, inputs, results and a hypothesis-check log. Numbers are
/// stored as exact strings ("p/q") so both renderings show the same values.
class Report {
 public:
  explicit Report(std::string command);

  Json& inputs() { return doc_["inputs"]; }
  Json& results() { return doc_["results"]; }
  void check(const std::string& name, bool passed, bool required = true, const std::string& detail = "");
  void add_checks(const std::vector<Check>& checks);

  /// True iff every required check passed.
  bool ok() const;

  const Json& json() const { return doc_; }
  std::string to_json() const;
  void render_text(std::ostream& os) const;

 private:
  Json doc_;
};

inline std::string exact(const Rational& q) { return q.get_str(); }

}  // namespace turaev::cli
