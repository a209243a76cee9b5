#pragma once

// Self-check suites run by `e6char verify`.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "e6char/rootsys.hpp"

namespace e6char::verify {

struct SuiteReport {
  std::string suite;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  ///< first few failure messages
  std::vector<std::string> notes;     ///< one-line summaries
  double seconds = 0.0;

  bool ok() const { return failed == 0; }
  void expect(bool cond, std::string_view what);
};

struct SuiteOptions {
  Coord max_coord = 2;  ///< bound on m_i in lambda sweeps
};

/// roots, characters, multiplicity_free, ab_bijection, psi, lweight.
const std::vector<std::string>& suite_names();
bool known_suite(std::string_view name);

/// Runs one suite; "all" is handled by the caller. Throws InvalidInput on an
/// unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opts = {});

}  // namespace e6char::verify
