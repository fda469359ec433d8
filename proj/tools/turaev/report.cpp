#include "report.hpp"

namespace turaev::cli {

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "none";
  return v.dump();
}

void render(std::ostream& os, const Json& v, const std::string& indent) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Json& x = it.value();
    if (x.is_object()) {
      os << indent << it.key() << ":\n";
      render(os, x, indent + "  ");
    } else if (x.is_array()) {
      bool flat = true;
      for (const auto& e : x) flat = flat && !e.is_object() && !e.is_array();
      if (flat) {
        os << indent << it.key() << ": [";
        for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << scalar(x[i]);
        os << "]\n";
      } else {
        os << indent << it.key() << ":\n";
        for (const auto& e : x) {
          if (e.is_object()) {
            os << indent << "  -\n";
            render(os, e, indent + "    ");
          } else {
            os << indent << "  - " << e.dump() << '\n';
          }
        }
      }
    } else {
      os << indent << it.key() << ": " << scalar(x) << '\n';
    }
  }
}

}  // namespace

Report::Report(std::string command) {
  doc_["command"] = std::move(command);
  doc_["inputs"] = Json::object();
  doc_["results"] = Json::object();
  doc_["checks"] = Json::array();
}

void Report::check(const std::string& name, bool passed, bool required, const std::string& detail) {
  doc_["checks"].push_back({{"name", name}, {"passed", passed}, {"required", required}, {"detail", detail}});
}

void Report::add_checks(const std::vector<Check>& checks) {
  for (const auto& c : checks) check(c.name, c.passed, c.required, c.detail);
}

bool Report::ok() const {
  for (const auto& c : doc_["checks"])
    if (c["required"].get<bool>() && !c["passed"].get<bool>()) return false;
  return true;
}

std::string Report::to_json() const {
  Json out = doc_;
  out["ok"] = ok();
  return out.dump(2) + "\n";
}

void Report::render_text(std::ostream& os) const {
  os << "command: " << doc_["command"].get<std::string>() << '\n';
  if (!doc_["inputs"].empty()) {
    os << "inputs:\n";
    render(os, doc_["inputs"], "  ");
  }
  os << "results:\n";
  render(os, doc_["results"], "  ");
  if (!doc_["checks"].empty()) {
    os << "checks:\n";
    for (const auto& c : doc_["checks"]) {
      const bool passed = c["passed"].get<bool>();
      const bool required = c["required"].get<bool>();
      const char* tag = passed ? "PASS" : (required ? "FAIL" : "SKIP");
      os << "  [" << tag << "] " << c["name"].get<std::string>();
      const auto detail = c["detail"].get<std::string>();
      if (!detail.empty()) os << " (" << detail << ")";
      os << '\n';
    }
  }
  os << "status: " << (ok() ? "ok" : "failed") << '\n';
}

}  // namespace turaev::cli
