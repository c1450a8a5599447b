#include "tilegroup/table.hpp"

#include "tilegroup/error.hpp"

namespace tilegroup {

std::map<std::pair<std::size_t, std::size_t>, std::size_t> OperationTable::product_map() const {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> m;
  for (const auto& [i, j, k] : entries) {
    auto [it, fresh] = m.emplace(std::make_pair(i, j), k);
    if (!fresh && it->second != k) throw Error("operation table is not a function");
  }
  return m;
}

GroupLikeCheck check_group_like(const OperationTable& table, std::size_t identity,
                                const std::vector<std::size_t>& inverse) {
  const std::size_t n = table.labels.size();
  if (identity >= n || inverse.size() != n) throw InvalidArgument("identity or inverse map out of range");
  const auto prod = table.product_map();
  auto lookup = [&prod](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
    auto it = prod.find({i, j});
    if (it == prod.end()) return std::nullopt;
    return it->second;
  };
  GroupLikeCheck c;
  for (std::size_t s = 0; s < n; ++s) {
    if (lookup(identity, s) != s || lookup(s, identity) != s) ++c.gl1;
    if (lookup(inverse[s], s) != identity || lookup(s, inverse[s]) != identity) ++c.gl2;
  }
  for (const auto& [i, j, k] : table.entries) {
    if (lookup(inverse[j], inverse[i]) != inverse[k]) ++c.gl3;
  }
  return c;
}

}  // namespace tilegroup
