#ifndef UPDOWN_REPORT_HPP
#define UPDOWN_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace updown {

// One verified identity instance.
struct Check {
  std::string input;
  std::string expected;
  std::string got;
  bool pass = false;
};

// Outcome of a verification suite: every checked instance plus the overall
// verdict (pass iff every check passed and at least one check ran).
struct Report {
  std::string name;
  std::map<std::string, std::string> parameters;
  std::vector<Check> checks;
  bool pass = false;

  void add(std::string input, std::string expected, std::string got,
           bool ok) {
    checks.push_back(Check{std::move(input), std::move(expected),
                           std::move(got), ok});
  }
  void finalize() {
    pass = !checks.empty();
    for (const auto& c : checks) pass = pass && c.pass;
  }
};

}  // namespace updown

#endif  // UPDOWN_REPORT_HPP
