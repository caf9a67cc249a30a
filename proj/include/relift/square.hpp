#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relift/errors.hpp"
#include "relift/preorder.hpp"
#include "relift/relation.hpp"
#include "relift/span.hpp"

namespace relift {

/// Lax square
///
///        P --p1--> B
///        |    %    |
///        p0        g
///        v         v
///        A --f---> C
///
/// with comparison cell f(p0 w) <= g(p1 w) for every w.
struct LaxSquare {
  MonotoneMap p0, p1, f, g;
};

inline bool square_shape_ok(const LaxSquare& sq) {
  return sq.p0.dom() == sq.p1.dom() && sq.p0.cod() == sq.f.dom() && sq.p1.cod() == sq.g.dom() &&
         sq.f.cod() == sq.g.cod();
}

inline bool is_lax(const LaxSquare& sq) {
  if (!square_shape_ok(sq)) return false;
  const FinPreorder& c = sq.f.cod();
  for (int w = 0; w < sq.p0.dom().size(); ++w)
    if (!c.leq(sq.f.apply(sq.p0.apply(w)), sq.g.apply(sq.p1.apply(w)))) return false;
  return true;
}

inline void require_lax(const LaxSquare& sq) {
  if (!square_shape_ok(sq)) fail(Err::ShapeMismatch, "square maps do not fit a lax square");
  if (!is_lax(sq)) fail(Err::NotLax, "comparison cell f.p0 <= g.p1 is missing");
}

/// First (a,b) with C(fa,gb) != sup_w A(a,p0 w) and B(p1 w,b), if any.
inline std::optional<std::pair<std::string, std::string>> exactness_counterexample(
    const LaxSquare& sq) {
  require_lax(sq);
  const FinPreorder& a = sq.f.dom();
  const FinPreorder& b = sq.g.dom();
  const FinPreorder& c = sq.f.cod();
  const FinPreorder& p = sq.p0.dom();
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < b.size(); ++y) {
      bool sup = false;
      for (int w = 0; w < p.size() && !sup; ++w)
        sup = a.leq(x, sq.p0.apply(w)) && b.leq(sq.p1.apply(w), y);
      if (sup != c.leq(sq.f.apply(x), sq.g.apply(y)))
        return std::make_pair(a.elem(x), b.elem(y));
    }
  return std::nullopt;
}

inline bool is_exact_square(const LaxSquare& sq) { return !exactness_counterexample(sq); }

/// The two sides of the relation-level reading of exactness; kept as an
/// independent route so the elementwise criterion can be cross-checked.
inline MonotoneRelation exact_square_lhs(const LaxSquare& sq) {
  return compose_rel(diamond_up(sq.f), diamond_low(sq.g));
}

inline MonotoneRelation exact_square_rhs(const LaxSquare& sq) {
  return compose_rel(diamond_low(sq.p0), diamond_up(sq.p1));
}

enum class SquareKind {
  YonedaLeft,
  YonedaRight,
  Comma,
  OpComma,
  Embedding,
  AbsDense,
  AdjunctionUnit,
  AdjunctionCounit,
  RelativeAdjoint,
  AbsoluteKan,
  PullbackOfFibrations,
  Custom,
};

inline const char* square_kind_name(SquareKind k) {
  switch (k) {
    case SquareKind::YonedaLeft: return "YonedaLeft";
    case SquareKind::YonedaRight: return "YonedaRight";
    case SquareKind::Comma: return "Comma";
    case SquareKind::OpComma: return "OpComma";
    case SquareKind::Embedding: return "Embedding";
    case SquareKind::AbsDense: return "AbsDense";
    case SquareKind::AdjunctionUnit: return "AdjunctionUnit";
    case SquareKind::AdjunctionCounit: return "AdjunctionCounit";
    case SquareKind::RelativeAdjoint: return "RelativeAdjoint";
    case SquareKind::AbsoluteKan: return "AbsoluteKan";
    case SquareKind::PullbackOfFibrations: return "PullbackOfFibrations";
    case SquareKind::Custom: return "Custom";
  }
  return "Unknown";
}

/// Builds the named square shape from its generating maps.
///
/// Expected maps per kind:
///   YonedaLeft(f)            top edge f, identities left and right
///   YonedaRight(f)           bottom-left edge f
///   Comma(f, g)              comma projections over f, g
///   OpComma(f, g)            injections into the op-comma of f, g
///   Embedding(f)             exact iff f is an order-embedding
///   AbsDense(e)              exact iff e is absolutely dense
///   AdjunctionUnit(f, u)     exact iff f -| u
///   AdjunctionCounit(f, u)   exact iff f -| u
///   RelativeAdjoint(f, u, j) exact iff f is left adjoint to u along j
///   AbsoluteKan(h, j, l)     exact iff l is an absolute left Kan
///                            extension of h along j
///   PullbackOfFibrations(d1S, d0R)  legs of two fibrations into the
///                            shared middle; the strict pullback square
///   Custom(p0, p1, f, g)
///
/// The returned square is not forced to be lax; kinds whose side
/// condition fails simply produce a square that is_lax rejects.
inline LaxSquare catalog_square(SquareKind kind, const std::vector<MonotoneMap>& maps) {
  auto need = [&](size_t n) {
    if (maps.size() != n)
      fail(Err::ShapeMismatch, std::string(square_kind_name(kind)) + " expects " +
                                   std::to_string(n) + " maps, got " + std::to_string(maps.size()));
  };
  switch (kind) {
    case SquareKind::YonedaLeft: {
      need(1);
      const MonotoneMap& f = maps[0];
      return {MonotoneMap::identity(f.dom()), f, f, MonotoneMap::identity(f.cod())};
    }
    case SquareKind::YonedaRight: {
      need(1);
      const MonotoneMap& f = maps[0];
      return {f, MonotoneMap::identity(f.dom()), MonotoneMap::identity(f.cod()), f};
    }
    case SquareKind::Comma: {
      need(2);
      if (maps[0].cod() != maps[1].cod())
        fail(Err::ShapeMismatch, "Comma expects maps with a common codomain");
      CommaResult cr = comma_object(maps[0], maps[1]);
      return {cr.p0, cr.p1, maps[0], maps[1]};
    }
    case SquareKind::OpComma: {
      need(2);
      if (maps[0].dom() != maps[1].dom())
        fail(Err::ShapeMismatch, "OpComma expects maps with a common domain");
      OpcommaResult oc = opcomma_object(maps[0], maps[1]);
      return {maps[0], maps[1], oc.i0, oc.i1};
    }
    case SquareKind::Embedding: {
      need(1);
      const MonotoneMap& f = maps[0];
      MonotoneMap id = MonotoneMap::identity(f.dom());
      return {id, id, f, f};
    }
    case SquareKind::AbsDense: {
      need(1);
      const MonotoneMap& e = maps[0];
      MonotoneMap id = MonotoneMap::identity(e.cod());
      return {e, e, id, id};
    }
    case SquareKind::AdjunctionUnit: {
      need(2);
      const MonotoneMap& f = maps[0];
      const MonotoneMap& u = maps[1];
      if (u.dom() != f.cod() || u.cod() != f.dom())
        fail(Err::ShapeMismatch, "AdjunctionUnit expects f: X->A and u: A->X");
      MonotoneMap id = MonotoneMap::identity(f.dom());
      return {id, f, id, u};
    }
    case SquareKind::AdjunctionCounit: {
      need(2);
      const MonotoneMap& f = maps[0];
      const MonotoneMap& u = maps[1];
      if (u.dom() != f.cod() || u.cod() != f.dom())
        fail(Err::ShapeMismatch, "AdjunctionCounit expects f: X->A and u: A->X");
      MonotoneMap id = MonotoneMap::identity(u.dom());
      return {u, id, f, id};
    }
    case SquareKind::RelativeAdjoint: {
      need(3);
      const MonotoneMap& f = maps[0];
      const MonotoneMap& u = maps[1];
      const MonotoneMap& j = maps[2];
      if (j.dom() != f.dom() || u.dom() != f.cod() || u.cod() != j.cod())
        fail(Err::ShapeMismatch, "RelativeAdjoint expects f: X'->A, u: A->X, j: X'->X");
      return {MonotoneMap::identity(f.dom()), f, j, u};
    }
    case SquareKind::AbsoluteKan: {
      need(3);
      const MonotoneMap& h = maps[0];
      const MonotoneMap& j = maps[1];
      const MonotoneMap& l = maps[2];
      if (j.dom() != h.dom() || l.dom() != j.cod() || l.cod() != h.cod())
        fail(Err::ShapeMismatch, "AbsoluteKan expects h: A->X, j: A->B, l: B->X");
      return {h, j, MonotoneMap::identity(h.cod()), l};
    }
    case SquareKind::PullbackOfFibrations: {
      need(2);
      if (maps[0].cod() != maps[1].cod())
        fail(Err::ShapeMismatch, "PullbackOfFibrations expects legs into a common middle");
      PullbackResult pb = pullback_maps(maps[0], maps[1]);
      return {pb.q0, pb.q1, maps[0], maps[1]};
    }
    case SquareKind::Custom: {
      need(4);
      return {maps[0], maps[1], maps[2], maps[3]};
    }
  }
  fail(Err::ShapeMismatch, "unknown square kind");
}

/// X(x, lb) = sup_a X(x, ha) and B(ja, b), for all x and b.
inline bool is_absolute_lan(const MonotoneMap& h, const MonotoneMap& j, const MonotoneMap& l) {
  LaxSquare sq = catalog_square(SquareKind::AbsoluteKan, {h, j, l});
  return is_lax(sq) && is_exact_square(sq);
}

/// All four preorders replaced by opposites; the projections swap with
/// each other and so do the cospan edges. Exactness is preserved and
/// reflected.
inline LaxSquare dual_square(const LaxSquare& sq) {
  return {opposite_map(sq.p1), opposite_map(sq.p0), opposite_map(sq.g), opposite_map(sq.f)};
}

/// For squares whose f and p1 are left adjoints: exact iff
/// p0 . p1^r = f^r . g, up to pointwise order-equivalence.
inline bool left_adjoint_square_criterion(const LaxSquare& sq) {
  require_lax(sq);
  std::optional<MonotoneMap> fr = find_right_adjoint(sq.f);
  std::optional<MonotoneMap> p1r = find_right_adjoint(sq.p1);
  if (!fr || !p1r) fail(Err::NotLeftAdjoint, "f and p1 must both be left adjoints");
  return map_equiv(compose(sq.p0, *p1r), compose(*fr, sq.g));
}

}  // namespace relift
