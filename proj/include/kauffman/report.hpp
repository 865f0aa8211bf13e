#ifndef KAUFFMAN_REPORT_HPP
#define KAUFFMAN_REPORT_HPP

#include <string>
#include <vector>

namespace kauffman {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const CheckResult& c : checks) {
      if (!c.pass) {
        return false;
      }
    }
    return true;
  }

  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }

  // One "PASS name detail" / "FAIL name detail" line per check.
  std::string to_text() const {
    std::string out;
    for (const CheckResult& c : checks) {
      out += c.pass ? "PASS " : "FAIL ";
      out += c.name;
      if (!c.detail.empty()) {
        out += ' ';
        out += c.detail;
      }
      out += '\n';
    }
    return out;
  }
};

}  // namespace kauffman

#endif
