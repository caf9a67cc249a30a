#pragma once

#include <string>
#include <vector>

#include "relift/relift.hpp"

namespace fixtures {

using namespace relift;

/// Chain 0 <= 1 <= ... <= n-1.
inline FinPreorder chain(int n, const std::string& prefix = "") {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) elems.push_back(prefix + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    pairs.emplace_back(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(i + 1)]);
  return FinPreorder::from_pairs(elems, pairs, true);
}

inline FinPreorder discrete(const std::vector<std::string>& elems) {
  return FinPreorder::from_pairs(elems, {}, true);
}

inline FinPreorder singleton() { return discrete({"*"}); }

/// a <= c >= b.
inline FinPreorder vee() {
  return FinPreorder::from_pairs({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}, true);
}

/// x <= y <= x plus an incomparable point z.
inline FinPreorder two_cycle_plus_point() {
  return FinPreorder::from_pairs({"x", "y", "z"}, {{"x", "y"}, {"y", "x"}});
}

inline MonotoneMap map_of(const FinPreorder& dom, const FinPreorder& cod,
                          const std::vector<std::pair<std::string, std::string>>& entries) {
  std::unordered_map<std::string, std::string> table(entries.begin(), entries.end());
  return MonotoneMap::from_table(dom, cod, table);
}

/// Relation from entry list given as (dst, src) pairs, closed.
inline MonotoneRelation rel_of(const FinPreorder& src, const FinPreorder& dst,
                               const std::vector<std::pair<std::string, std::string>>& entries,
                               bool close = false) {
  std::vector<bool> mat(static_cast<size_t>(src.size()) * dst.size(), false);
  for (const auto& [b, a] : entries)
    mat[static_cast<size_t>(dst.index(b)) * src.size() + src.index(a)] = true;
  return close ? MonotoneRelation::closure(src, dst, std::move(mat))
               : MonotoneRelation::checked(src, dst, std::move(mat));
}

}  // namespace fixtures
