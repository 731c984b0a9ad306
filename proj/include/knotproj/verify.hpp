#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knotproj {

struct VerifyOptions {
  // Crossing bound for the suite; each suite has its own default.
  std::optional<std::size_t> max_n;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::size_t checked = 0;
  std::size_t max_n = 0;
  // First failing word and what went wrong with it.
  std::optional<std::string> counterexample;
  std::string detail;
  // Extra table lines (the twist suite lists n, tr, X).
  std::vector<std::string> rows;
};

// deltas, parity, twist, strong-trivial, bracket.
const std::vector<std::string>& suite_names();

std::size_t default_max_n(std::string_view suite);

// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view suite, const VerifyOptions& options);

}  // namespace knotproj
