#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relift/downsets.hpp"
#include "relift/errors.hpp"
#include "relift/preorder.hpp"

namespace relift {

/// Monotone relation R from src A to dst B, stored as a boolean matrix
/// indexed mat[b][a] with b a dst index and a a src index.
///
/// Matrix orientation, fixed throughout: mat[b][a] = 1 reads "R(b,a)",
/// and the bimodule law is
///     R(b,a) and b1 <= b in B and a <= a1 in A  implies  R(b1,a1)
/// (shrink the target, grow the source). The identity relation on A is
/// the order matrix itself: id(b,a) = A(b,a) = [b <= a].
class MonotoneRelation {
 public:
  MonotoneRelation() = default;

  /// Validating constructor: rejects matrices that break the bimodule
  /// law instead of closing them.
  static MonotoneRelation checked(FinPreorder src, FinPreorder dst, std::vector<bool> mat) {
    MonotoneRelation r(std::move(src), std::move(dst), std::move(mat));
    for (int b = 0; b < r.dst_.size(); ++b)
      for (int a = 0; a < r.src_.size(); ++a) {
        if (!r.at(b, a)) continue;
        for (int b1 = 0; b1 < r.dst_.size(); ++b1)
          for (int a1 = 0; a1 < r.src_.size(); ++a1)
            if (r.dst_.leq(b1, b) && r.src_.leq(a, a1) && !r.at(b1, a1))
              fail(Err::NotMonotone, "entry (" + r.dst_.elem(b) + "," + r.src_.elem(a) +
                                         ") forces missing entry (" + r.dst_.elem(b1) + "," +
                                         r.src_.elem(a1) + ")");
      }
    return r;
  }

  /// Least monotone relation containing `mat`.
  static MonotoneRelation closure(FinPreorder src, FinPreorder dst, std::vector<bool> mat) {
    MonotoneRelation r(std::move(src), std::move(dst), std::move(mat));
    std::vector<bool> out(r.mat_.size(), false);
    for (int b = 0; b < r.dst_.size(); ++b)
      for (int a = 0; a < r.src_.size(); ++a) {
        if (!r.at(b, a)) continue;
        for (int b1 = 0; b1 < r.dst_.size(); ++b1)
          if (r.dst_.leq(b1, b))
            for (int a1 = 0; a1 < r.src_.size(); ++a1)
              if (r.src_.leq(a, a1)) out[static_cast<size_t>(b1) * r.src_.size() + a1] = true;
      }
    r.mat_ = std::move(out);
    return r;
  }

  static MonotoneRelation bottom(FinPreorder src, FinPreorder dst) {
    size_t sz = static_cast<size_t>(src.size()) * dst.size();
    return MonotoneRelation(std::move(src), std::move(dst), std::vector<bool>(sz, false));
  }

  static MonotoneRelation top(FinPreorder src, FinPreorder dst) {
    size_t sz = static_cast<size_t>(src.size()) * dst.size();
    return MonotoneRelation(std::move(src), std::move(dst), std::vector<bool>(sz, true));
  }

  /// Identity relation: the order matrix of A.
  static MonotoneRelation identity(const FinPreorder& a) {
    std::vector<bool> mat(static_cast<size_t>(a.size()) * a.size());
    for (int b = 0; b < a.size(); ++b)
      for (int x = 0; x < a.size(); ++x) mat[static_cast<size_t>(b) * a.size() + x] = a.leq(b, x);
    return MonotoneRelation(a, a, std::move(mat));
  }

  const FinPreorder& src() const { return src_; }
  const FinPreorder& dst() const { return dst_; }

  bool at(int b, int a) const { return mat_[static_cast<size_t>(b) * src_.size() + a]; }
  bool at(const std::string& b, const std::string& a) const {
    return at(dst_.index(b), src_.index(a));
  }
  const std::vector<bool>& mat() const { return mat_; }

  int count() const {
    int c = 0;
    for (bool v : mat_) c += v;
    return c;
  }

  bool operator==(const MonotoneRelation& o) const {
    return src_ == o.src_ && dst_ == o.dst_ && mat_ == o.mat_;
  }
  bool operator!=(const MonotoneRelation& o) const { return !(*this == o); }

 private:
  MonotoneRelation(FinPreorder src, FinPreorder dst, std::vector<bool> mat)
      : src_(std::move(src)), dst_(std::move(dst)), mat_(std::move(mat)) {
    if (mat_.size() != static_cast<size_t>(src_.size()) * dst_.size())
      fail(Err::BadArtifact, "relation matrix shape mismatch");
  }

  FinPreorder src_, dst_;
  std::vector<bool> mat_;
};

/// S after R: (S.R)(c,a) = sup_b R(b,a) and S(c,b).
inline MonotoneRelation compose_rel(const MonotoneRelation& s, const MonotoneRelation& r) {
  if (r.dst() != s.src()) fail(Err::ObjectMismatch, "compose_rel: middle objects differ");
  std::vector<bool> mat(static_cast<size_t>(s.dst().size()) * r.src().size(), false);
  for (int c = 0; c < s.dst().size(); ++c)
    for (int a = 0; a < r.src().size(); ++a) {
      bool v = false;
      for (int b = 0; b < r.dst().size() && !v; ++b) v = r.at(b, a) && s.at(c, b);
      mat[static_cast<size_t>(c) * r.src().size() + a] = v;
    }
  // The composite satisfies the bimodule law automatically.
  return MonotoneRelation::checked(r.src(), s.dst(), std::move(mat));
}

inline MonotoneRelation id_rel(const FinPreorder& a) { return MonotoneRelation::identity(a); }

/// Pointwise entailment.
inline bool leq_rel(const MonotoneRelation& r, const MonotoneRelation& s) {
  if (r.src() != s.src() || r.dst() != s.dst()) fail(Err::ObjectMismatch, "leq_rel: shapes differ");
  for (int b = 0; b < r.dst().size(); ++b)
    for (int a = 0; a < r.src().size(); ++a)
      if (r.at(b, a) && !s.at(b, a)) return false;
  return true;
}

inline MonotoneRelation meet_rel(const MonotoneRelation& r, const MonotoneRelation& s) {
  if (r.src() != s.src() || r.dst() != s.dst()) fail(Err::ObjectMismatch, "meet_rel: shapes differ");
  std::vector<bool> mat(r.mat().size());
  for (size_t i = 0; i < mat.size(); ++i) mat[i] = r.mat()[i] && s.mat()[i];
  return MonotoneRelation::checked(r.src(), r.dst(), std::move(mat));
}

/// Lower graph of f: A->B, the relation A -|-> B with entries B(b, fa).
inline MonotoneRelation diamond_low(const MonotoneMap& f) {
  const FinPreorder& a = f.dom();
  const FinPreorder& b = f.cod();
  std::vector<bool> mat(static_cast<size_t>(b.size()) * a.size());
  for (int y = 0; y < b.size(); ++y)
    for (int x = 0; x < a.size(); ++x)
      mat[static_cast<size_t>(y) * a.size() + x] = b.leq(y, f.apply(x));
  return MonotoneRelation::checked(a, b, std::move(mat));
}

/// Upper graph of f: A->B, the relation B -|-> A with entries B(fa, b).
inline MonotoneRelation diamond_up(const MonotoneMap& f) {
  const FinPreorder& a = f.dom();
  const FinPreorder& b = f.cod();
  std::vector<bool> mat(static_cast<size_t>(a.size()) * b.size());
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y)
      mat[static_cast<size_t>(x) * b.size() + y] = b.leq(f.apply(x), y);
  return MonotoneRelation::checked(b, a, std::move(mat));
}

struct DiamondPair {
  MonotoneRelation low, up;
};

inline DiamondPair diamonds(const MonotoneMap& f) { return {diamond_low(f), diamond_up(f)}; }

/// True iff id <= R.L and L.R <= id, i.e. L -| R.
inline bool check_adjoint_pair(const MonotoneRelation& l, const MonotoneRelation& r) {
  if (l.src() != r.dst() || l.dst() != r.src())
    fail(Err::ObjectMismatch, "check_adjoint_pair: shapes do not compose");
  return leq_rel(id_rel(l.src()), compose_rel(r, l)) &&
         leq_rel(compose_rel(l, r), id_rel(l.dst()));
}

/// Recovers the monotone map f with diamond_low(f) = L and
/// diamond_up(f) = R. On a proper preorder codomain the witness is only
/// determined up to order-equivalence; ties resolve to the least
/// element id. With `require_unique`, ambiguity raises instead.
inline MonotoneMap adjoint_to_map(const MonotoneRelation& l, const MonotoneRelation& r,
                                  bool require_unique = false) {
  if (!check_adjoint_pair(l, r)) fail(Err::NotAdjointPair, "relations are not an adjoint pair");
  const FinPreorder& a = l.src();
  const FinPreorder& b = l.dst();
  std::vector<int> table(static_cast<size_t>(a.size()));
  for (int x = 0; x < a.size(); ++x) {
    int best = -1;
    int found = 0;
    for (int y = 0; y < b.size(); ++y) {
      if (!(r.at(x, y) && l.at(y, x))) continue;
      ++found;
      if (best == -1 || b.elem(y) < b.elem(best)) best = y;
    }
    if (best == -1) fail(Err::NotAdjointPair, "no witness above " + a.elem(x));
    if (require_unique && found > 1)
      fail(Err::AmbiguousWitness, "several order-equivalent witnesses for " + a.elem(x));
    table[static_cast<size_t>(x)] = best;
  }
  return MonotoneMap(a, b, std::move(table));
}

/// Relation between bare sets: what is left after forgetting the order.
struct PlainRelation {
  std::vector<std::string> src, dst;
  std::vector<bool> mat;  // mat[b * |src| + a]

  bool at(int b, int a) const { return mat[static_cast<size_t>(b) * src.size() + a]; }

  bool operator==(const PlainRelation& o) const {
    return src == o.src && dst == o.dst && mat == o.mat;
  }
};

inline PlainRelation forget_rel(const MonotoneRelation& r) {
  return {r.src().elems(), r.dst().elems(), r.mat()};
}

inline PlainRelation plain_compose(const PlainRelation& s, const PlainRelation& r) {
  if (r.dst != s.src) fail(Err::ObjectMismatch, "plain_compose: middle sets differ");
  PlainRelation out{r.src, s.dst, std::vector<bool>(r.src.size() * s.dst.size(), false)};
  for (size_t c = 0; c < s.dst.size(); ++c)
    for (size_t a = 0; a < r.src.size(); ++a) {
      bool v = false;
      for (size_t b = 0; b < r.dst.size() && !v; ++b)
        v = r.at(static_cast<int>(b), static_cast<int>(a)) &&
            s.at(static_cast<int>(c), static_cast<int>(b));
      out.mat[c * r.src.size() + a] = v;
    }
  return out;
}

/// Equality graphs of the underlying function of f.
inline PlainRelation plain_graph_low(const MonotoneMap& f) {
  PlainRelation out{f.dom().elems(), f.cod().elems(),
                    std::vector<bool>(static_cast<size_t>(f.dom().size()) * f.cod().size(), false)};
  for (int x = 0; x < f.dom().size(); ++x)
    out.mat[static_cast<size_t>(f.apply(x)) * f.dom().size() + x] = true;
  return out;
}

inline PlainRelation plain_graph_up(const MonotoneMap& f) {
  PlainRelation out{f.cod().elems(), f.dom().elems(),
                    std::vector<bool>(static_cast<size_t>(f.cod().size()) * f.dom().size(), false)};
  for (int x = 0; x < f.dom().size(); ++x)
    out.mat[static_cast<size_t>(x) * f.cod().size() + f.apply(x)] = true;
  return out;
}

// ---------------------------------------------------------------------------
// Lowerset structure: the Kleisli side of the relation calculus.

/// Downsets of A ordered by inclusion.
inline FinPreorder lowerset_preorder(const FinPreorder& a, int cap = kDefaultLowersetCap) {
  return enumerate_lowersets(a, cap).object;
}

/// Uppersets of A ordered by inclusion, i.e. downsets of A^op.
inline FinPreorder upperset_preorder(const FinPreorder& a, int cap = kDefaultLowersetCap) {
  return enumerate_lowersets(opposite(a), cap).object;
}

/// Action of the lowerset construction on maps: W maps to the
/// down-closure of its image.
inline MonotoneMap lowerset_map(const MonotoneMap& f, int cap = kDefaultLowersetCap) {
  LowersetFamily da = enumerate_lowersets(f.dom(), cap);
  LowersetFamily db = enumerate_lowersets(f.cod(), cap);
  std::vector<int> table(da.masks.size());
  for (size_t i = 0; i < da.masks.size(); ++i) {
    uint64_t image = 0;
    for (int x = 0; x < f.dom().size(); ++x)
      if (da.masks[i] >> x & 1) image |= uint64_t{1} << f.apply(x);
    table[i] = db.index_of(down_closure(f.cod(), image));
  }
  return MonotoneMap(da.object, db.object, std::move(table));
}

/// Kleisli extension of R: A -|-> B along principal downsets:
/// W maps to { b | exists a in W with R(b,a) }.
inline MonotoneMap dagger(const MonotoneRelation& r, int cap = kDefaultLowersetCap) {
  LowersetFamily da = enumerate_lowersets(r.src(), cap);
  LowersetFamily db = enumerate_lowersets(r.dst(), cap);
  std::vector<int> table(da.masks.size());
  for (size_t i = 0; i < da.masks.size(); ++i) {
    uint64_t out = 0;
    for (int b = 0; b < r.dst().size(); ++b)
      for (int a = 0; a < r.src().size(); ++a)
        if ((da.masks[i] >> a & 1) && r.at(b, a)) {
          out |= uint64_t{1} << b;
          break;
        }
    table[i] = db.index_of(out);
  }
  return MonotoneMap(da.object, db.object, std::move(table));
}

/// a maps to its principal downset.
inline MonotoneMap yoneda_unit(const FinPreorder& a, int cap = kDefaultLowersetCap) {
  LowersetFamily fam = enumerate_lowersets(a, cap);
  std::vector<int> table(static_cast<size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i)
    table[static_cast<size_t>(i)] = fam.index_of(principal_downset(a, i));
  return MonotoneMap(a, fam.object, std::move(table));
}

/// Union of members, L(L(A)) -> L(A).
inline MonotoneMap kz_mult(const FinPreorder& a, int cap = kDefaultLowersetCap) {
  LowersetFamily la = enumerate_lowersets(a, cap);
  LowersetFamily lla = enumerate_lowersets(la.object, 1 << 30);
  std::vector<int> table(lla.masks.size());
  for (size_t w = 0; w < lla.masks.size(); ++w) {
    uint64_t un = 0;
    for (size_t i = 0; i < la.masks.size(); ++i)
      if (lla.masks[w] >> i & 1) un |= la.masks[i];
    table[w] = la.index_of(un);
  }
  return MonotoneMap(lla.object, la.object, std::move(table));
}

/// Lowerset elementhood, L(A) -|-> A: relates a to W iff a is in W.
inline MonotoneRelation lowerset_elementhood(const FinPreorder& a, int cap = kDefaultLowersetCap) {
  LowersetFamily la = enumerate_lowersets(a, cap);
  std::vector<bool> mat(static_cast<size_t>(a.size()) * la.masks.size());
  for (int x = 0; x < a.size(); ++x)
    for (size_t w = 0; w < la.masks.size(); ++w)
      mat[static_cast<size_t>(x) * la.masks.size() + w] = (la.masks[w] >> x & 1) != 0;
  return MonotoneRelation::checked(la.object, a, std::move(mat));
}

/// Upperset elementhood, the relation from [A,2] (uppersets of A by
/// inclusion) to A^op that relates x to V iff V(x). This is the upper
/// graph of the principal-downset map of A^op.
inline MonotoneRelation elementhood(const FinPreorder& a, int cap = kDefaultLowersetCap) {
  FinPreorder aop = opposite(a);
  LowersetFamily ua = enumerate_lowersets(aop, cap);
  std::vector<bool> mat(static_cast<size_t>(aop.size()) * ua.masks.size());
  for (int x = 0; x < aop.size(); ++x)
    for (size_t v = 0; v < ua.masks.size(); ++v)
      mat[static_cast<size_t>(x) * ua.masks.size() + v] = (ua.masks[v] >> x & 1) != 0;
  return MonotoneRelation::checked(ua.object, aop, std::move(mat));
}

}  // namespace relift
