#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relift/errors.hpp"

namespace relift {

/// A finite preorder: a list of named elements together with a
/// reflexive-transitive order matrix. Values are immutable after
/// construction and safe to share across threads.
///
/// The matrix is stored densely; `leq(i, j)` means element i is below
/// element j. Constructors close the input under reflexivity and
/// transitivity rather than rejecting non-closed input.
class FinPreorder {
 public:
  FinPreorder() = default;

  /// Builds the preorder generated by `pairs` (Warshall closure).
  /// With `require_poset`, rejects carriers where the closure has a
  /// nontrivial cycle.
  static FinPreorder from_pairs(std::vector<std::string> elems,
                                const std::vector<std::pair<std::string, std::string>>& pairs,
                                bool require_poset = false) {
    FinPreorder p;
    p.init_elems(std::move(elems));
    const int n = p.size();
    p.leq_.assign(static_cast<size_t>(n) * n, false);
    for (int i = 0; i < n; ++i) p.leq_[static_cast<size_t>(i) * n + i] = true;
    for (const auto& [lo, hi] : pairs) {
      p.leq_[static_cast<size_t>(p.index(lo)) * n + p.index(hi)] = true;
    }
    p.close();
    p.finish(require_poset);
    return p;
  }

  /// Builds from an explicit matrix, closing it reflexively and
  /// transitively first.
  static FinPreorder from_matrix(std::vector<std::string> elems,
                                 const std::vector<std::vector<bool>>& rows,
                                 bool require_poset = false) {
    FinPreorder p;
    p.init_elems(std::move(elems));
    const int n = p.size();
    if (static_cast<int>(rows.size()) != n)
      fail(Err::BadArtifact, "leq matrix has " + std::to_string(rows.size()) + " rows, expected " +
                                 std::to_string(n));
    p.leq_.assign(static_cast<size_t>(n) * n, false);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n)
        fail(Err::BadArtifact, "leq matrix row " + std::to_string(i) + " has wrong length");
      for (int j = 0; j < n; ++j) p.leq_[static_cast<size_t>(i) * n + j] = rows[i][j];
      p.leq_[static_cast<size_t>(i) * n + i] = true;
    }
    p.close();
    p.finish(require_poset);
    return p;
  }

  /// Trusted constructor: `rows` must already be reflexive and
  /// transitive. Used by derived constructions whose output is closed
  /// by construction.
  static FinPreorder from_closed(std::vector<std::string> elems, std::vector<bool> flat) {
    FinPreorder p;
    p.init_elems(std::move(elems));
    p.leq_ = std::move(flat);
    p.finish(false);
    return p;
  }

  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }

  const std::string& elem(int i) const { return elems_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& elems() const { return elems_; }

  bool contains(const std::string& id) const { return index_.count(id) > 0; }

  int index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) fail(Err::BadArtifact, "unknown element '" + id + "'");
    return it->second;
  }

  bool leq(int i, int j) const { return leq_[static_cast<size_t>(i) * size() + j]; }
  bool leq(const std::string& a, const std::string& b) const { return leq(index(a), index(b)); }

  /// a <= b and b <= a.
  bool equiv(int i, int j) const { return leq(i, j) && leq(j, i); }

  bool is_poset() const { return poset_; }

  bool is_discrete() const {
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (i != j && leq(i, j)) return false;
    return true;
  }

  std::vector<std::vector<bool>> matrix() const {
    std::vector<std::vector<bool>> rows(size(), std::vector<bool>(size()));
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j) rows[i][j] = leq(i, j);
    return rows;
  }

  /// Equality is by element list and matrix, not isomorphism.
  bool operator==(const FinPreorder& o) const { return elems_ == o.elems_ && leq_ == o.leq_; }
  bool operator!=(const FinPreorder& o) const { return !(*this == o); }

 private:
  void init_elems(std::vector<std::string> elems) {
    elems_ = std::move(elems);
    for (int i = 0; i < size(); ++i) {
      if (!index_.emplace(elems_[static_cast<size_t>(i)], i).second)
        fail(Err::DuplicateElement, "'" + elems_[static_cast<size_t>(i)] + "'");
    }
  }

  void close() {
    const int n = size();
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (leq_[static_cast<size_t>(i) * n + k])
          for (int j = 0; j < n; ++j)
            if (leq_[static_cast<size_t>(k) * n + j]) leq_[static_cast<size_t>(i) * n + j] = true;
  }

  void finish(bool require_poset) {
    poset_ = true;
    for (int i = 0; i < size() && poset_; ++i)
      for (int j = 0; j < size(); ++j)
        if (i != j && leq(i, j) && leq(j, i)) {
          poset_ = false;
          break;
        }
    if (require_poset && !poset_) fail(Err::NotAPoset, "order has a cycle of length >= 2");
  }

  std::vector<std::string> elems_;
  std::unordered_map<std::string, int> index_;
  std::vector<bool> leq_;
  bool poset_ = true;
};

/// Order-preserving function between finite preorders.
class MonotoneMap {
 public:
  MonotoneMap() = default;

  MonotoneMap(FinPreorder dom, FinPreorder cod, std::vector<int> table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (static_cast<int>(table_.size()) != dom_.size())
      fail(Err::BadArtifact, "map table size does not match domain");
    for (int v : table_)
      if (v < 0 || v >= cod_.size()) fail(Err::BadArtifact, "map table value out of range");
    for (int a = 0; a < dom_.size(); ++a)
      for (int b = 0; b < dom_.size(); ++b)
        if (dom_.leq(a, b) && !cod_.leq(table_[static_cast<size_t>(a)], table_[static_cast<size_t>(b)]))
          fail(Err::NotMonotone, "map violates order at " + dom_.elem(a) + " <= " + dom_.elem(b));
  }

  static MonotoneMap from_table(FinPreorder dom, FinPreorder cod,
                                const std::unordered_map<std::string, std::string>& table) {
    std::vector<int> t(static_cast<size_t>(dom.size()));
    for (int a = 0; a < dom.size(); ++a) {
      auto it = table.find(dom.elem(a));
      if (it == table.end()) fail(Err::BadArtifact, "map table missing '" + dom.elem(a) + "'");
      t[static_cast<size_t>(a)] = cod.index(it->second);
    }
    if (table.size() != static_cast<size_t>(dom.size()))
      fail(Err::BadArtifact, "map table mentions elements outside the domain");
    return MonotoneMap(std::move(dom), std::move(cod), std::move(t));
  }

  static MonotoneMap identity(const FinPreorder& a) {
    std::vector<int> t(static_cast<size_t>(a.size()));
    for (int i = 0; i < a.size(); ++i) t[static_cast<size_t>(i)] = i;
    return MonotoneMap(a, a, std::move(t));
  }

  static MonotoneMap constant(const FinPreorder& dom, const FinPreorder& cod,
                              const std::string& value) {
    std::vector<int> t(static_cast<size_t>(dom.size()), cod.index(value));
    return MonotoneMap(dom, cod, std::move(t));
  }

  const FinPreorder& dom() const { return dom_; }
  const FinPreorder& cod() const { return cod_; }
  const std::vector<int>& table() const { return table_; }

  int apply(int i) const { return table_[static_cast<size_t>(i)]; }
  const std::string& apply(const std::string& id) const { return cod_.elem(apply(dom_.index(id))); }

  bool operator==(const MonotoneMap& o) const {
    return dom_ == o.dom_ && cod_ == o.cod_ && table_ == o.table_;
  }
  bool operator!=(const MonotoneMap& o) const { return !(*this == o); }

 private:
  FinPreorder dom_, cod_;
  std::vector<int> table_;
};

/// g after f.
inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.cod() != g.dom()) fail(Err::ObjectMismatch, "compose: middle objects differ");
  std::vector<int> t(static_cast<size_t>(f.dom().size()));
  for (int a = 0; a < f.dom().size(); ++a) t[static_cast<size_t>(a)] = g.apply(f.apply(a));
  return MonotoneMap(f.dom(), g.cod(), std::move(t));
}

/// Pointwise: f(a) <= g(a) for all a.
inline bool map_leq(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) fail(Err::ObjectMismatch, "map_leq: shapes differ");
  for (int a = 0; a < f.dom().size(); ++a)
    if (!f.cod().leq(f.apply(a), g.apply(a))) return false;
  return true;
}

/// Pointwise order-equivalence: f(a) and g(a) are isomorphic for all a.
/// On posets this is map equality.
inline bool map_equiv(const MonotoneMap& f, const MonotoneMap& g) {
  return map_leq(f, g) && map_leq(g, f);
}

inline FinPreorder opposite(const FinPreorder& a) {
  const int n = a.size();
  std::vector<bool> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = a.leq(j, i);
  return FinPreorder::from_closed(a.elems(), std::move(flat));
}

/// Same table read as a map between the opposite preorders.
inline MonotoneMap opposite_map(const MonotoneMap& f) {
  return MonotoneMap(opposite(f.dom()), opposite(f.cod()), f.table());
}

inline std::string pair_id(const std::string& x, const std::string& y) {
  return "(" + x + "," + y + ")";
}

struct ProductResult {
  FinPreorder object;
  MonotoneMap proj0, proj1;
};

inline ProductResult product(const FinPreorder& a, const FinPreorder& b) {
  std::vector<std::string> elems;
  std::vector<int> t0, t1;
  elems.reserve(static_cast<size_t>(a.size()) * b.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) {
      elems.push_back(pair_id(a.elem(i), b.elem(j)));
      t0.push_back(i);
      t1.push_back(j);
    }
  const int n = static_cast<int>(elems.size());
  std::vector<bool> flat(static_cast<size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      flat[static_cast<size_t>(p) * n + q] =
          a.leq(t0[static_cast<size_t>(p)], t0[static_cast<size_t>(q)]) &&
          b.leq(t1[static_cast<size_t>(p)], t1[static_cast<size_t>(q)]);
  FinPreorder obj = FinPreorder::from_closed(std::move(elems), std::move(flat));
  MonotoneMap p0(obj, a, std::move(t0));
  MonotoneMap p1(obj, b, std::move(t1));
  return {std::move(obj), std::move(p0), std::move(p1)};
}

struct CoproductResult {
  FinPreorder object;
  MonotoneMap inj0, inj1;
};

inline CoproductResult coproduct(const FinPreorder& a, const FinPreorder& b) {
  std::vector<std::string> elems;
  for (int i = 0; i < a.size(); ++i) elems.push_back("inl:" + a.elem(i));
  for (int j = 0; j < b.size(); ++j) elems.push_back("inr:" + b.elem(j));
  const int n = static_cast<int>(elems.size());
  std::vector<bool> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) flat[static_cast<size_t>(i) * n + j] = a.leq(i, j);
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      flat[static_cast<size_t>(a.size() + i) * n + (a.size() + j)] = b.leq(i, j);
  FinPreorder obj = FinPreorder::from_closed(std::move(elems), std::move(flat));
  std::vector<int> t0(static_cast<size_t>(a.size())), t1(static_cast<size_t>(b.size()));
  for (int i = 0; i < a.size(); ++i) t0[static_cast<size_t>(i)] = i;
  for (int j = 0; j < b.size(); ++j) t1[static_cast<size_t>(j)] = a.size() + j;
  MonotoneMap i0(a, obj, std::move(t0));
  MonotoneMap i1(b, obj, std::move(t1));
  return {std::move(obj), std::move(i0), std::move(i1)};
}

struct CommaResult {
  FinPreorder object;
  MonotoneMap p0, p1;
};

/// Comma object f/g: pairs (a,b) with f(a) <= g(b), ordered pointwise.
inline CommaResult comma_object(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.cod() != g.cod()) fail(Err::CodomainMismatch, "comma_object: codomains differ");
  const FinPreorder& a = f.dom();
  const FinPreorder& b = g.dom();
  const FinPreorder& c = f.cod();
  std::vector<std::string> elems;
  std::vector<int> t0, t1;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      if (c.leq(f.apply(i), g.apply(j))) {
        elems.push_back(pair_id(a.elem(i), b.elem(j)));
        t0.push_back(i);
        t1.push_back(j);
      }
  const int n = static_cast<int>(elems.size());
  std::vector<bool> flat(static_cast<size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      flat[static_cast<size_t>(p) * n + q] =
          a.leq(t0[static_cast<size_t>(p)], t0[static_cast<size_t>(q)]) &&
          b.leq(t1[static_cast<size_t>(p)], t1[static_cast<size_t>(q)]);
  FinPreorder obj = FinPreorder::from_closed(std::move(elems), std::move(flat));
  MonotoneMap p0(obj, a, std::move(t0));
  MonotoneMap p1(obj, b, std::move(t1));
  return {std::move(obj), std::move(p0), std::move(p1)};
}

struct OpcommaResult {
  FinPreorder object;
  MonotoneMap i0, i1;
};

/// Op-comma object of f: C->A and g: C->B. Carrier is the disjoint union
/// of A and B; the only cross pairs are inl(a) <= inr(b) whenever some c
/// has a <= f(c) and g(c) <= b. The result can be a proper preorder even
/// when all inputs are posets.
inline OpcommaResult opcomma_object(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.dom() != g.dom()) fail(Err::DomainMismatch, "opcomma_object: domains differ");
  const FinPreorder& c = f.dom();
  const FinPreorder& a = f.cod();
  const FinPreorder& b = g.cod();
  std::vector<std::string> elems;
  for (int i = 0; i < a.size(); ++i) elems.push_back("inl:" + a.elem(i));
  for (int j = 0; j < b.size(); ++j) elems.push_back("inr:" + b.elem(j));
  const int n = static_cast<int>(elems.size());
  std::vector<bool> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) flat[static_cast<size_t>(i) * n + j] = a.leq(i, j);
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      flat[static_cast<size_t>(a.size() + i) * n + (a.size() + j)] = b.leq(i, j);
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) {
      bool cross = false;
      for (int k = 0; k < c.size() && !cross; ++k)
        cross = a.leq(i, f.apply(k)) && b.leq(g.apply(k), j);
      flat[static_cast<size_t>(i) * n + (a.size() + j)] = cross;
    }
  FinPreorder obj = FinPreorder::from_closed(std::move(elems), std::move(flat));
  std::vector<int> t0(static_cast<size_t>(a.size())), t1(static_cast<size_t>(b.size()));
  for (int i = 0; i < a.size(); ++i) t0[static_cast<size_t>(i)] = i;
  for (int j = 0; j < b.size(); ++j) t1[static_cast<size_t>(j)] = a.size() + j;
  MonotoneMap i0(a, obj, std::move(t0));
  MonotoneMap i1(b, obj, std::move(t1));
  return {std::move(obj), std::move(i0), std::move(i1)};
}

struct PullbackResult {
  FinPreorder object;
  MonotoneMap q0, q1;
};

/// Strict pullback of f: A->C and g: B->C: pairs with f(a) = g(b).
inline PullbackResult pullback_maps(const MonotoneMap& f, const MonotoneMap& g) {
  if (f.cod() != g.cod()) fail(Err::CodomainMismatch, "pullback_maps: codomains differ");
  const FinPreorder& a = f.dom();
  const FinPreorder& b = g.dom();
  std::vector<std::string> elems;
  std::vector<int> t0, t1;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      if (f.apply(i) == g.apply(j)) {
        elems.push_back(pair_id(a.elem(i), b.elem(j)));
        t0.push_back(i);
        t1.push_back(j);
      }
  const int n = static_cast<int>(elems.size());
  std::vector<bool> flat(static_cast<size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      flat[static_cast<size_t>(p) * n + q] =
          a.leq(t0[static_cast<size_t>(p)], t0[static_cast<size_t>(q)]) &&
          b.leq(t1[static_cast<size_t>(p)], t1[static_cast<size_t>(q)]);
  FinPreorder obj = FinPreorder::from_closed(std::move(elems), std::move(flat));
  MonotoneMap q0(obj, a, std::move(t0));
  MonotoneMap q1(obj, b, std::move(t1));
  return {std::move(obj), std::move(q0), std::move(q1)};
}

inline bool is_order_embedding(const MonotoneMap& f) {
  for (int a = 0; a < f.dom().size(); ++a)
    for (int b = 0; b < f.dom().size(); ++b)
      if (f.cod().leq(f.apply(a), f.apply(b)) != f.dom().leq(a, b)) return false;
  return true;
}

inline bool is_surjective_on_objects(const MonotoneMap& f) {
  std::vector<bool> hit(static_cast<size_t>(f.cod().size()), false);
  for (int a = 0; a < f.dom().size(); ++a) hit[static_cast<size_t>(f.apply(a))] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

/// e is absolutely dense iff B(b,b') = sup_a B(b,ea) and B(ea,b').
inline bool is_absolutely_dense(const MonotoneMap& e) {
  const FinPreorder& b = e.cod();
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y) {
      bool sup = false;
      for (int a = 0; a < e.dom().size() && !sup; ++a)
        sup = b.leq(x, e.apply(a)) && b.leq(e.apply(a), y);
      if (sup != b.leq(x, y)) return false;
    }
  return true;
}

/// Returns u: A->X with A(f x, a) = X(x, u a) for all x, a, if it exists.
/// u(a) is picked pointwise as a greatest element of {x | f(x) <= a};
/// ties between order-equivalent candidates go to the least element id.
inline std::optional<MonotoneMap> find_right_adjoint(const MonotoneMap& f) {
  const FinPreorder& x = f.dom();
  const FinPreorder& a = f.cod();
  std::vector<int> table(static_cast<size_t>(a.size()));
  for (int v = 0; v < a.size(); ++v) {
    std::vector<int> fiber;
    for (int i = 0; i < x.size(); ++i)
      if (a.leq(f.apply(i), v)) fiber.push_back(i);
    int best = -1;
    for (int cand : fiber) {
      bool top = true;
      for (int i : fiber)
        if (!x.leq(i, cand)) {
          top = false;
          break;
        }
      if (top && (best == -1 || x.elem(cand) < x.elem(best))) best = cand;
    }
    if (best == -1) return std::nullopt;
    table[static_cast<size_t>(v)] = best;
  }
  return MonotoneMap(a, x, std::move(table));
}

struct QuotientResult {
  FinPreorder object;
  MonotoneMap q;
};

/// Poset reflection: strongly connected components with the induced
/// order. Component ids are the least member element id.
inline QuotientResult quotient_poset(const FinPreorder& a) {
  const int n = a.size();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  std::vector<int> rep;
  for (int i = 0; i < n; ++i) {
    if (comp[static_cast<size_t>(i)] != -1) continue;
    int c = static_cast<int>(rep.size());
    int least = i;
    for (int j = i; j < n; ++j)
      if (a.equiv(i, j)) {
        comp[static_cast<size_t>(j)] = c;
        if (a.elem(j) < a.elem(least)) least = j;
      }
    rep.push_back(least);
  }
  const int m = static_cast<int>(rep.size());
  std::vector<std::string> elems;
  elems.reserve(static_cast<size_t>(m));
  for (int c = 0; c < m; ++c) elems.push_back(a.elem(rep[static_cast<size_t>(c)]));
  std::vector<bool> flat(static_cast<size_t>(m) * m);
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d)
      flat[static_cast<size_t>(c) * m + d] = a.leq(rep[static_cast<size_t>(c)], rep[static_cast<size_t>(d)]);
  FinPreorder obj = FinPreorder::from_closed(std::move(elems), std::move(flat));
  MonotoneMap q(a, obj, std::move(comp));
  return {std::move(obj), std::move(q)};
}

}  // namespace relift
