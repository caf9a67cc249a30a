#pragma once

#include <string>
#include <vector>

#include "relift/preorder.hpp"
#include "relift/relation.hpp"

namespace relift {

/// All preorders on n labeled elements "0".."n-1" (reflexive-transitive
/// boolean matrices). Exhaustive only at desk scale: 1, 1, 4, 29 for
/// n = 0..3.
inline std::vector<FinPreorder> all_preorders(int n, bool posets_only = false) {
  std::vector<std::string> elems;
  for (int i = 0; i < n; ++i) elems.push_back(std::to_string(i));
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<FinPreorder> out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << slots.size()); ++bits) {
    std::vector<bool> flat(static_cast<size_t>(n) * n, false);
    for (int i = 0; i < n; ++i) flat[static_cast<size_t>(i) * n + i] = true;
    for (size_t s = 0; s < slots.size(); ++s)
      if (bits >> s & 1) flat[static_cast<size_t>(slots[s].first) * n + slots[s].second] = true;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        for (int k = 0; k < n && transitive; ++k)
          if (flat[static_cast<size_t>(i) * n + j] && flat[static_cast<size_t>(j) * n + k] &&
              !flat[static_cast<size_t>(i) * n + k])
            transitive = false;
    if (!transitive) continue;
    FinPreorder p = FinPreorder::from_closed(elems, std::move(flat));
    if (posets_only && !p.is_poset()) continue;
    out.push_back(std::move(p));
  }
  return out;
}

/// All monotone maps A -> B, by filtering the |B|^|A| tables.
inline std::vector<MonotoneMap> all_monotone_maps(const FinPreorder& a, const FinPreorder& b) {
  std::vector<MonotoneMap> out;
  if (a.size() == 0) {
    out.push_back(MonotoneMap(a, b, {}));
    return out;
  }
  if (b.size() == 0) return out;
  std::vector<int> table(static_cast<size_t>(a.size()), 0);
  for (;;) {
    bool monotone = true;
    for (int i = 0; i < a.size() && monotone; ++i)
      for (int j = 0; j < a.size() && monotone; ++j)
        if (a.leq(i, j) && !b.leq(table[static_cast<size_t>(i)], table[static_cast<size_t>(j)]))
          monotone = false;
    if (monotone) out.push_back(MonotoneMap(a, b, table));
    int pos = 0;
    while (pos < a.size()) {
      if (++table[static_cast<size_t>(pos)] < b.size()) break;
      table[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == a.size()) break;
  }
  return out;
}

/// All monotone relations A -|-> B, by filtering all matrices against
/// the bimodule law.
inline std::vector<MonotoneRelation> all_monotone_relations(const FinPreorder& a,
                                                            const FinPreorder& b) {
  std::vector<MonotoneRelation> out;
  const int cells = a.size() * b.size();
  for (uint64_t bits = 0; bits < (uint64_t{1} << cells); ++bits) {
    std::vector<bool> mat(static_cast<size_t>(cells));
    for (int c = 0; c < cells; ++c) mat[static_cast<size_t>(c)] = (bits >> c & 1) != 0;
    bool law = true;
    for (int y = 0; y < b.size() && law; ++y)
      for (int x = 0; x < a.size() && law; ++x) {
        if (!mat[static_cast<size_t>(y) * a.size() + x]) continue;
        for (int y1 = 0; y1 < b.size() && law; ++y1)
          for (int x1 = 0; x1 < a.size() && law; ++x1)
            if (b.leq(y1, y) && a.leq(x, x1) && !mat[static_cast<size_t>(y1) * a.size() + x1])
              law = false;
      }
    if (law) out.push_back(MonotoneRelation::checked(a, b, std::move(mat)));
  }
  return out;
}

}  // namespace relift
