#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "relift/preorder.hpp"
#include "relift/relation.hpp"

namespace relift {

/// Seeded generators for fixtures. mt19937_64 is fully specified, so a
/// fixed seed reproduces the same suite on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t raw() { return engine_(); }

  int below(int n) { return n <= 1 ? 0 : static_cast<int>(raw() % static_cast<uint64_t>(n)); }

  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool flip(double p = 0.5) {
    return (static_cast<double>(raw() >> 11) * 0x1.0p-53) < p;
  }

 private:
  std::mt19937_64 engine_;
};

/// Random preorder on `size` elements, as the closure of a handful of
/// random pairs. `prefix` keeps carriers from distinct draws disjoint.
inline FinPreorder random_preorder(Rng& rng, int size, const std::string& prefix = "x",
                                   bool poset = false) {
  std::vector<std::string> elems;
  for (int i = 0; i < size; ++i) elems.push_back(prefix + std::to_string(i));
  for (;;) {
    std::vector<std::pair<std::string, std::string>> pairs;
    int npairs = rng.below(size * size + 1);
    for (int k = 0; k < npairs; ++k) {
      int i = rng.below(size), j = rng.below(size);
      pairs.emplace_back(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]);
    }
    FinPreorder p = FinPreorder::from_pairs(elems, pairs);
    if (!poset || p.is_poset()) return p;
  }
}

/// Random monotone map, built pointwise in a topological-ish sweep with
/// rejection. Falls back to a constant map if sampling stalls.
inline MonotoneMap random_monotone_map(Rng& rng, const FinPreorder& a, const FinPreorder& b) {
  if (a.size() == 0) return MonotoneMap(a, b, {});
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<int> table(static_cast<size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) table[static_cast<size_t>(i)] = rng.below(b.size());
    bool monotone = true;
    for (int i = 0; i < a.size() && monotone; ++i)
      for (int j = 0; j < a.size() && monotone; ++j)
        if (a.leq(i, j) && !b.leq(table[static_cast<size_t>(i)], table[static_cast<size_t>(j)]))
          monotone = false;
    if (monotone) return MonotoneMap(a, b, std::move(table));
  }
  return MonotoneMap::constant(a, b, b.elem(rng.below(b.size())));
}

/// Random monotone relation: the closure of a random sprinkle of
/// entries, occasionally bottom or top.
inline MonotoneRelation random_monotone_relation(Rng& rng, const FinPreorder& a,
                                                 const FinPreorder& b) {
  std::vector<bool> mat(static_cast<size_t>(a.size()) * b.size(), false);
  if (!mat.empty()) {
    int entries = rng.below(a.size() * b.size() + 1);
    for (int k = 0; k < entries; ++k)
      mat[static_cast<size_t>(rng.below(b.size())) * a.size() + rng.below(a.size())] = true;
  }
  return MonotoneRelation::closure(a, b, std::move(mat));
}

}  // namespace relift
