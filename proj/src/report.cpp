#include "netlap/report.hpp"

#include <algorithm>
#include <sstream>

namespace netlap {

void Report::add(std::string name, bool pass, std::string detail) {
  checks_.push_back({std::move(name), pass ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
}

void Report::skip(std::string name, std::string reason) {
  checks_.push_back({std::move(name), CheckStatus::Skipped, std::move(reason)});
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool Report::ok() const {
  return std::none_of(checks_.begin(), checks_.end(),
                      [](const Check& c) { return c.status == CheckStatus::Fail; });
}

const Check* Report::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

bool Report::passed(const std::string& name) const {
  const Check* c = find(name);
  return c != nullptr && c->passed();
}

std::string Report::str() const {
  std::ostringstream out;
  for (const Check& c : checks_) {
    switch (c.status) {
      case CheckStatus::Pass: out << "PASS " << c.name; break;
      case CheckStatus::Fail: out << "FAIL " << c.name; break;
      case CheckStatus::Skipped: out << "SKIP " << c.name; break;
    }
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return out.str();
}

}  // namespace netlap
