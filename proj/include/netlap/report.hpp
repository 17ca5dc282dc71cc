#pragma once

#include <string>
#include <vector>

namespace netlap {

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  /// Witness on failure, reason when skipped.
  std::string detail;

  bool passed() const { return status == CheckStatus::Pass; }
};

/// Ordered list of named identity checks.
class Report {
 public:
  void add(std::string name, bool pass, std::string detail = {});
  void skip(std::string name, std::string reason);
  void append(const Report& other);

  const std::vector<Check>& checks() const { return checks_; }
  /// No check failed. Skipped checks do not count as failures.
  bool ok() const;
  const Check* find(const std::string& name) const;
  bool passed(const std::string& name) const;

  /// One line per check: `PASS name`, `FAIL name: detail`, `SKIP name: reason`.
  std::string str() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace netlap
