#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tilegroup {

/// Finite partial binary operation: entries (i, j, k) mean elements[i] o elements[j] = elements[k].
struct OperationTable {
  std::vector<std::string> labels;
  std::vector<std::array<std::size_t, 3>> entries;

  /// (i, j) -> k lookup.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> product_map() const;
};

/// Violations of GL1-GL3 for the given identity and inverse assignment.
struct GroupLikeCheck {
  long gl1 = 0;
  long gl2 = 0;
  long gl3 = 0;
  long total() const { return gl1 + gl2 + gl3; }
};

GroupLikeCheck check_group_like(const OperationTable& table, std::size_t identity,
                                const std::vector<std::size_t>& inverse);

}  // namespace tilegroup
