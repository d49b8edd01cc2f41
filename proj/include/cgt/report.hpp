#ifndef CGT_REPORT_HPP_
#define CGT_REPORT_HPP_

#include <algorithm>
#include <string>
#include <vector>

namespace cgt {

  // A named verdict with an optional witness or explanation.
  struct Check {
    std::string name;
    bool        passed = false;
    std::string detail;
  };

  struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = {}) {
      checks.push_back({std::move(name), passed, std::move(detail)});
    }
    bool passed() const {
      return std::all_of(checks.begin(), checks.end(),
                         [](Check const& c) { return c.passed; });
    }
    Check const* find(std::string const& name) const {
      auto it = std::find_if(checks.begin(), checks.end(),
                             [&](Check const& c) { return c.name == name; });
      return it == checks.end() ? nullptr : &*it;
    }
  };

}  // namespace cgt

#endif  // CGT_REPORT_HPP_
