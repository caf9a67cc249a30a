#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relift/errors.hpp"
#include "relift/preorder.hpp"
#include "relift/relation.hpp"

namespace relift {

/// A span of monotone maps with a shared vertex.
///
/// Convention table (fixed here once, used everywhere):
///   - A span (d0: E->X, d1: E->Y) presents a relation Y -|-> X, i.e.
///     src = cod(d1) and dst = cod(d0).
///   - For a relation R: A -|-> B this means d0 lands in the dst B and
///     d1 in the src A.
///   - Vertex elements print as "(dstElem,srcElem)".
/// Under this reading the presented relation is
/// compose_rel(diamond_low(d0), diamond_up(d1)).
struct Span {
  FinPreorder vertex;
  MonotoneMap d0, d1;
};

/// Two-sided discrete fibration check, by finite search:
///   (1) for e' and a <= d0(e') there is exactly one e with d0(e) = a,
///       d1(e) = d1(e') and e <= e';
///   (2) dually: for e and b <= d1(e) exactly one e'' with
///       d1(e'') = b, d0(e'') = d0(e) and e <= e'';
///   (3) every e <= e' factors through a middle element m with
///       d0(m) = d0(e'), d1(m) = d1(e), e <= m <= e'.
inline bool is_fibration(const Span& s) {
  const FinPreorder& e = s.vertex;
  const FinPreorder& x = s.d0.cod();
  const FinPreorder& y = s.d1.cod();
  for (int ep = 0; ep < e.size(); ++ep)
    for (int a = 0; a < x.size(); ++a) {
      if (!x.leq(a, s.d0.apply(ep))) continue;
      int hits = 0;
      for (int cand = 0; cand < e.size(); ++cand)
        if (s.d0.apply(cand) == a && s.d1.apply(cand) == s.d1.apply(ep) && e.leq(cand, ep)) ++hits;
      if (hits != 1) return false;
    }
  for (int ep = 0; ep < e.size(); ++ep)
    for (int b = 0; b < y.size(); ++b) {
      if (!y.leq(s.d1.apply(ep), b)) continue;
      int hits = 0;
      for (int cand = 0; cand < e.size(); ++cand)
        if (s.d1.apply(cand) == b && s.d0.apply(cand) == s.d0.apply(ep) && e.leq(ep, cand)) ++hits;
      if (hits != 1) return false;
    }
  for (int lo = 0; lo < e.size(); ++lo)
    for (int hi = 0; hi < e.size(); ++hi) {
      if (!e.leq(lo, hi)) continue;
      bool mid = false;
      for (int m = 0; m < e.size() && !mid; ++m)
        mid = s.d0.apply(m) == s.d0.apply(hi) && s.d1.apply(m) == s.d1.apply(lo) &&
              e.leq(lo, m) && e.leq(m, hi);
      if (!mid) return false;
    }
  return true;
}

/// Grothendieck construction: vertex = related pairs "(b,a)" ordered
/// pointwise, legs the projections.
inline Span relation_to_fibration(const MonotoneRelation& r) {
  const FinPreorder& a = r.src();
  const FinPreorder& b = r.dst();
  std::vector<std::string> elems;
  std::vector<int> t0, t1;
  for (int y = 0; y < b.size(); ++y)
    for (int x = 0; x < a.size(); ++x)
      if (r.at(y, x)) {
        elems.push_back(pair_id(b.elem(y), a.elem(x)));
        t0.push_back(y);
        t1.push_back(x);
      }
  const int n = static_cast<int>(elems.size());
  std::vector<bool> flat(static_cast<size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      flat[static_cast<size_t>(p) * n + q] =
          b.leq(t0[static_cast<size_t>(p)], t0[static_cast<size_t>(q)]) &&
          a.leq(t1[static_cast<size_t>(p)], t1[static_cast<size_t>(q)]);
  FinPreorder vertex = FinPreorder::from_closed(std::move(elems), std::move(flat));
  MonotoneMap d0(vertex, b, std::move(t0));
  MonotoneMap d1(vertex, a, std::move(t1));
  return {std::move(vertex), std::move(d0), std::move(d1)};
}

/// On-the-nose relation of a span: R(x,y) = 1 iff some e has
/// d0(e) = x and d1(e) = y. For a fibration this equals the diamond
/// composite compose_rel(diamond_low(d0), diamond_up(d1)); `strict`
/// insists on that reading and raises NotAFibration otherwise.
/// The result must satisfy the bimodule law to be representable at all,
/// which for arbitrary spans can fail (NotMonotone).
inline MonotoneRelation span_to_relation(const Span& s, bool strict = false) {
  if (strict && !is_fibration(s))
    fail(Err::NotAFibration, "strict span_to_relation needs a two-sided discrete fibration");
  const FinPreorder& x = s.d0.cod();
  const FinPreorder& y = s.d1.cod();
  std::vector<bool> mat(static_cast<size_t>(x.size()) * y.size(), false);
  for (int e = 0; e < s.vertex.size(); ++e)
    mat[static_cast<size_t>(s.d0.apply(e)) * y.size() + s.d1.apply(e)] = true;
  return MonotoneRelation::checked(y, x, std::move(mat));
}

/// Exists-formula of a span with no order law, total on arbitrary spans.
inline PlainRelation span_to_plain(const Span& s) {
  const FinPreorder& x = s.d0.cod();
  const FinPreorder& y = s.d1.cod();
  PlainRelation out{y.elems(), x.elems(),
                    std::vector<bool>(static_cast<size_t>(x.size()) * y.size(), false)};
  for (int e = 0; e < s.vertex.size(); ++e)
    out.mat[static_cast<size_t>(s.d0.apply(e)) * y.size() + s.d1.apply(e)] = true;
  return out;
}

struct TensorResult {
  Span fibration;       // presents the composite relation
  Span pullback;        // composable pairs, before the quotient
  MonotoneMap w;        // quotient map, surjective on objects
};

/// Composite of two fibrations. `outer` presents S: B -|-> C and
/// `inner` presents R: A -|-> B; the result presents S.R: A -|-> C.
/// The pullback matches outer.d1 with inner.d0 over B, and w collapses
/// a composable pair to its endpoints "(c,a)".
inline TensorResult tensor_fibrations(const Span& outer, const Span& inner) {
  if (outer.d1.cod() != inner.d0.cod())
    fail(Err::ObjectMismatch, "tensor_fibrations: middle objects differ");
  PullbackResult pb = pullback_maps(outer.d1, inner.d0);
  const FinPreorder& c = outer.d0.cod();
  const FinPreorder& a = inner.d1.cod();

  std::vector<std::string> elems;
  std::vector<int> t0, t1;
  std::vector<int> seen(static_cast<size_t>(c.size()) * a.size(), -1);
  std::vector<int> wt(static_cast<size_t>(pb.object.size()));
  for (int p = 0; p < pb.object.size(); ++p) {
    int ce = outer.d0.apply(pb.q0.apply(p));
    int ae = inner.d1.apply(pb.q1.apply(p));
    size_t key = static_cast<size_t>(ce) * a.size() + ae;
    if (seen[key] == -1) {
      seen[key] = static_cast<int>(elems.size());
      elems.push_back(pair_id(c.elem(ce), a.elem(ae)));
      t0.push_back(ce);
      t1.push_back(ae);
    }
    wt[static_cast<size_t>(p)] = seen[key];
  }
  const int n = static_cast<int>(elems.size());
  std::vector<bool> flat(static_cast<size_t>(n) * n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      flat[static_cast<size_t>(p) * n + q] =
          c.leq(t0[static_cast<size_t>(p)], t0[static_cast<size_t>(q)]) &&
          a.leq(t1[static_cast<size_t>(p)], t1[static_cast<size_t>(q)]);
  FinPreorder vertex = FinPreorder::from_closed(std::move(elems), std::move(flat));
  MonotoneMap d0(vertex, c, std::move(t0));
  MonotoneMap d1(vertex, a, std::move(t1));
  MonotoneMap w(pb.object, vertex, std::move(wt));
  return {{std::move(vertex), std::move(d0), std::move(d1)}, {pb.object, pb.q0, pb.q1},
          std::move(w)};
}

}  // namespace relift
