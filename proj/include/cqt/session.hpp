#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cqt/mutation_class.hpp"
#include "cqt/path_algebra.hpp"

namespace cqt {

enum class OutputFormat { Json, Dot, Text };

OutputFormat parse_output_format(const std::string& text);

/// Settings shared by one CLI invocation or one service request.
struct SessionConfig {
  std::size_t class_budget = kDefaultBudget;
  std::size_t completion_ceiling = 0;  // 0: number of vertices
  std::uint64_t seed = 0;
  std::optional<std::vector<std::string>> vertex_order;
  OutputFormat format = OutputFormat::Json;
  bool force = false;
  unsigned jobs = 1;

  /// Defaults, with CQT_BUDGET (a positive integer) overriding class_budget.
  static SessionConfig from_environment();

  ExploreOptions explore_options() const { return {class_budget, jobs}; }
  RewriteOptions rewrite_options() const { return {vertex_order, completion_ceiling, 100'000}; }
};

}  // namespace cqt
