#pragma once

#include <string>
#include <vector>

namespace kpo {

struct Violation {
  std::string where;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string suite;
  std::string range;
  std::vector<Violation> violations;
  long checked = 0;

  bool passed() const { return violations.empty(); }
  void add(std::string where, std::string expected, std::string actual) {
    violations.push_back({std::move(where), std::move(expected), std::move(actual)});
  }
};

}  // namespace kpo
