#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace monotile {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<Check> checks;
  bool passed() const;
};

enum class Suite { kClosure, kAssemblies, kDuals, kPatches, kAll };

/// closure, assemblies, duals, patches, all. Throws DomainError otherwise.
Suite parse_suite(std::string_view name);

/// Runs the invariant checks against the fixtures in data_dir(). Checks that
/// throw are recorded as failures with the exception text.
SuiteReport run_suite(Suite suite);

}  // namespace monotile
