#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "relift/errors.hpp"
#include "relift/preorder.hpp"

namespace relift {

inline constexpr int kDefaultLowersetCap = 16;

/// Canonical printed form for a subset of a carrier: members sorted by
/// element id, joined by commas. `style` is the opening bracket text,
/// e.g. "{" for plain subsets and "v{" for downsets.
inline std::string subset_id(const FinPreorder& base, uint64_t mask, const std::string& style) {
  std::vector<std::string> members;
  for (int i = 0; i < base.size(); ++i)
    if (mask >> i & 1) members.push_back(base.elem(i));
  std::sort(members.begin(), members.end());
  std::string out = style;
  for (size_t k = 0; k < members.size(); ++k) {
    if (k) out += ",";
    out += members[k];
  }
  out += "}";
  return out;
}

inline bool mask_subset(uint64_t s, uint64_t t) { return (s & ~t) == 0; }

inline bool is_down_closed(const FinPreorder& base, uint64_t mask) {
  for (int i = 0; i < base.size(); ++i)
    if (mask >> i & 1)
      for (int j = 0; j < base.size(); ++j)
        if (base.leq(j, i) && !(mask >> j & 1)) return false;
  return true;
}

inline uint64_t down_closure(const FinPreorder& base, uint64_t mask) {
  uint64_t out = 0;
  for (int i = 0; i < base.size(); ++i)
    if (mask >> i & 1)
      for (int j = 0; j < base.size(); ++j)
        if (base.leq(j, i)) out |= uint64_t{1} << j;
  return out;
}

inline uint64_t principal_downset(const FinPreorder& base, int i) {
  uint64_t out = 0;
  for (int j = 0; j < base.size(); ++j)
    if (base.leq(j, i)) out |= uint64_t{1} << j;
  return out;
}

/// All downsets of `base`, as bit masks plus the inclusion-ordered
/// preorder over ids "v{...}". Enumeration order is by mask value, so
/// every construction of the same family is id- and order-identical.
struct LowersetFamily {
  FinPreorder base;
  std::vector<uint64_t> masks;
  FinPreorder object;

  int index_of(uint64_t mask) const {
    auto it = by_mask_.find(mask);
    if (it == by_mask_.end()) fail(Err::BadArtifact, "not a downset of the base carrier");
    return it->second;
  }

  std::unordered_map<uint64_t, int> by_mask_;
};

inline LowersetFamily enumerate_lowersets(const FinPreorder& base, int cap = kDefaultLowersetCap) {
  if (base.size() > cap || base.size() > 62)
    fail(Err::SizeCapExceeded,
         "lowerset carrier over " + std::to_string(base.size()) + " elements exceeds cap " +
             std::to_string(cap));
  LowersetFamily fam;
  fam.base = base;
  const uint64_t limit = uint64_t{1} << base.size();
  for (uint64_t mask = 0; mask < limit; ++mask)
    if (is_down_closed(base, mask)) fam.masks.push_back(mask);
  std::vector<std::string> elems;
  elems.reserve(fam.masks.size());
  for (uint64_t mask : fam.masks) elems.push_back(subset_id(base, mask, "v{"));
  const int n = static_cast<int>(fam.masks.size());
  std::vector<bool> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      flat[static_cast<size_t>(i) * n + j] =
          mask_subset(fam.masks[static_cast<size_t>(i)], fam.masks[static_cast<size_t>(j)]);
  fam.object = FinPreorder::from_closed(std::move(elems), std::move(flat));
  for (int i = 0; i < n; ++i) fam.by_mask_.emplace(fam.masks[static_cast<size_t>(i)], i);
  return fam;
}

}  // namespace relift
