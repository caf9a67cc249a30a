#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relift/downsets.hpp"
#include "relift/errors.hpp"
#include "relift/preorder.hpp"
#include "relift/relation.hpp"
#include "relift/span.hpp"

namespace relift {

/// Size guards for carrier-exploding constructions. A set layer is one
/// of L, U, P, Pw, Pc, Pcw. Applying a set layer to a carrier larger
/// than `set_layer_arg` raises SizeCapExceeded, and an expression that
/// stacks two or more set layers refuses base carriers larger than
/// `nested_base`. Errors, never silent truncation.
struct SizeCaps {
  int set_layer_arg = 14;
  int nested_base = 6;
  int lowerset = kDefaultLowersetCap;
};

/// Canonical encoding of one element of T(A). The string form doubles
/// as the element id of the carrier produced by apply_functor_ob, so
/// set members are kept sorted by their printed form. Dual is a purely
/// structural wrapper: it prints as its body and only the order of the
/// ambient carrier flips.
class TElem {
 public:
  enum class Tag { Const, Id, Dual, InL, InR, Pair, DownSet, Subset, Convex, Comp };

  static TElem constant(std::string cname, std::string elem) {
    TElem t(Tag::Const);
    t.cname_ = std::move(cname);
    t.atom_ = std::move(elem);
    return t;
  }
  static TElem ident(std::string elem) {
    TElem t(Tag::Id);
    t.atom_ = std::move(elem);
    return t;
  }
  static TElem dual(TElem body) {
    TElem t(Tag::Dual);
    t.kids_.push_back(std::move(body));
    return t;
  }
  static TElem inl(TElem body) {
    TElem t(Tag::InL);
    t.kids_.push_back(std::move(body));
    return t;
  }
  static TElem inr(TElem body) {
    TElem t(Tag::InR);
    t.kids_.push_back(std::move(body));
    return t;
  }
  static TElem pair(TElem fst, TElem snd) {
    TElem t(Tag::Pair);
    t.kids_.push_back(std::move(fst));
    t.kids_.push_back(std::move(snd));
    return t;
  }
  static TElem downset(std::vector<TElem> members) { return set_like(Tag::DownSet, std::move(members)); }
  static TElem subset(std::vector<TElem> members) { return set_like(Tag::Subset, std::move(members)); }
  static TElem convex(std::vector<TElem> members) { return set_like(Tag::Convex, std::move(members)); }
  static TElem component(std::string rep) {
    TElem t(Tag::Comp);
    t.atom_ = std::move(rep);
    return t;
  }

  Tag tag() const { return tag_; }
  const std::string& atom() const { return atom_; }
  const std::string& const_name() const { return cname_; }
  const std::vector<TElem>& kids() const { return kids_; }

  std::string str() const {
    switch (tag_) {
      case Tag::Const: return "k:" + cname_ + ":" + atom_;
      case Tag::Id: return atom_;
      case Tag::Dual: return kids_[0].str();
      case Tag::InL: return "inl:" + kids_[0].str();
      case Tag::InR: return "inr:" + kids_[0].str();
      case Tag::Pair: return "(" + kids_[0].str() + "," + kids_[1].str() + ")";
      case Tag::DownSet: return join("v{");
      case Tag::Subset: return join("{");
      case Tag::Convex: return join("{");
      case Tag::Comp: return atom_;
    }
    return "";
  }

  bool operator==(const TElem& o) const {
    return tag_ == o.tag_ && atom_ == o.atom_ && cname_ == o.cname_ && kids_ == o.kids_;
  }

 private:
  explicit TElem(Tag tag) : tag_(tag) {}

  static TElem set_like(Tag tag, std::vector<TElem> members) {
    TElem t(tag);
    std::sort(members.begin(), members.end(),
              [](const TElem& a, const TElem& b) { return a.str() < b.str(); });
    t.kids_ = std::move(members);
    return t;
  }

  std::string join(const std::string& open) const {
    std::string out = open;
    for (size_t i = 0; i < kids_.size(); ++i) {
      if (i) out += ",";
      out += kids_[i].str();
    }
    return out + "}";
  }

  Tag tag_;
  std::string atom_, cname_;
  std::vector<TElem> kids_;
};

/// Expression tree of Kripke-polynomial functors. Constant nodes carry
/// their resolved preorder, so evaluation needs no registry.
class FunctorExpr {
 public:
  enum class Tag { Const, Id, Dual, Sum, Prod, Low, Up, Pow, PowFin, PowConvex, PowConvexFin, ConnComp };

  static FunctorExpr id() { return FunctorExpr(Tag::Id); }
  static FunctorExpr constant(std::string name, FinPreorder value) {
    FunctorExpr t(Tag::Const);
    t.name_ = std::move(name);
    t.const_value_ = std::move(value);
    return t;
  }
  static FunctorExpr dual(FunctorExpr body) { return unary(Tag::Dual, std::move(body)); }
  static FunctorExpr sum(FunctorExpr l, FunctorExpr r) { return binary(Tag::Sum, std::move(l), std::move(r)); }
  static FunctorExpr prod(FunctorExpr l, FunctorExpr r) { return binary(Tag::Prod, std::move(l), std::move(r)); }
  static FunctorExpr low(FunctorExpr body) { return unary(Tag::Low, std::move(body)); }
  static FunctorExpr up(FunctorExpr body) { return unary(Tag::Up, std::move(body)); }
  static FunctorExpr pow() { return FunctorExpr(Tag::Pow); }
  static FunctorExpr pow_fin() { return FunctorExpr(Tag::PowFin); }
  static FunctorExpr pow_convex() { return FunctorExpr(Tag::PowConvex); }
  static FunctorExpr pow_convex_fin() { return FunctorExpr(Tag::PowConvexFin); }
  static FunctorExpr conn_comp() { return FunctorExpr(Tag::ConnComp); }

  Tag tag() const { return tag_; }
  const std::string& const_name() const { return name_; }
  const FinPreorder& const_value() const { return const_value_; }
  const FunctorExpr& kid(int i) const { return kids_[static_cast<size_t>(i)]; }
  const std::vector<FunctorExpr>& kids() const { return kids_; }

  bool operator==(const FunctorExpr& o) const {
    return tag_ == o.tag_ && name_ == o.name_ && const_value_ == o.const_value_ && kids_ == o.kids_;
  }
  bool operator!=(const FunctorExpr& o) const { return !(*this == o); }

  /// Canonical concrete syntax; parse_functor round-trips it.
  std::string str() const { return print(0); }

 private:
  explicit FunctorExpr(Tag tag) : tag_(tag) {}
  static FunctorExpr unary(Tag tag, FunctorExpr body) {
    FunctorExpr t(tag);
    t.kids_.push_back(std::move(body));
    return t;
  }
  static FunctorExpr binary(Tag tag, FunctorExpr l, FunctorExpr r) {
    FunctorExpr t(tag);
    t.kids_.push_back(std::move(l));
    t.kids_.push_back(std::move(r));
    return t;
  }

  // precedence: sum 0, prod 1, prefix 2, atoms 3
  std::string print(int min_prec) const {
    auto wrap = [&](int prec, std::string body) {
      return prec < min_prec ? "(" + body + ")" : body;
    };
    switch (tag_) {
      case Tag::Id: return "Id";
      case Tag::Pow: return "P";
      case Tag::PowFin: return "Pw";
      case Tag::PowConvex: return "Pc";
      case Tag::PowConvexFin: return "Pcw";
      case Tag::ConnComp: return "CC";
      case Tag::Const: return "const(" + name_ + ")";
      case Tag::Dual: return "dual(" + kids_[0].print(0) + ")";
      case Tag::Low: return wrap(2, "L " + kids_[0].print(2));
      case Tag::Up: return wrap(2, "U " + kids_[0].print(2));
      case Tag::Prod: return wrap(1, kids_[0].print(1) + " * " + kids_[1].print(2));
      case Tag::Sum: return wrap(0, kids_[0].print(0) + " + " + kids_[1].print(1));
    }
    return "";
  }

  Tag tag_;
  std::string name_;
  FinPreorder const_value_;
  std::vector<FunctorExpr> kids_;
};

inline bool is_set_layer(FunctorExpr::Tag t) {
  using Tag = FunctorExpr::Tag;
  return t == Tag::Low || t == Tag::Up || t == Tag::Pow || t == Tag::PowFin ||
         t == Tag::PowConvex || t == Tag::PowConvexFin;
}

/// Maximum number of set layers stacked along one path.
inline int set_layer_depth(const FunctorExpr& t) {
  int inner = 0;
  for (const FunctorExpr& k : t.kids()) inner = std::max(inner, set_layer_depth(k));
  return inner + (is_set_layer(t.tag()) ? 1 : 0);
}

/// A functor value T(A): the carrier preorder (element ids are the
/// canonical TElem strings) plus the parallel decoded elements.
struct AppliedFunctor {
  FinPreorder object;
  std::vector<TElem> elems;

  int index_of(const TElem& e) const { return object.index(e.str()); }
};

namespace detail {

inline void check_set_layer_cap(int arg_size, const SizeCaps& caps, const char* what) {
  if (arg_size > caps.set_layer_arg)
    fail(Err::SizeCapExceeded, std::string(what) + " over " + std::to_string(arg_size) +
                                   " elements exceeds cap " + std::to_string(caps.set_layer_arg));
}

inline bool em_leq(const FinPreorder& base, uint64_t s, uint64_t t) {
  for (int x = 0; x < base.size(); ++x) {
    if (!(s >> x & 1)) continue;
    bool ok = false;
    for (int y = 0; y < base.size() && !ok; ++y) ok = (t >> y & 1) && base.leq(x, y);
    if (!ok) return false;
  }
  for (int y = 0; y < base.size(); ++y) {
    if (!(t >> y & 1)) continue;
    bool ok = false;
    for (int x = 0; x < base.size() && !ok; ++x) ok = (s >> x & 1) && base.leq(x, y);
    if (!ok) return false;
  }
  return true;
}

inline bool is_convex_mask(const FinPreorder& base, uint64_t mask) {
  for (int x = 0; x < base.size(); ++x)
    if (mask >> x & 1)
      for (int z = 0; z < base.size(); ++z)
        if (mask >> z & 1)
          for (int y = 0; y < base.size(); ++y)
            if (!(mask >> y & 1) && base.leq(x, y) && base.leq(y, z)) return false;
  return true;
}

inline uint64_t convex_hull_mask(const FinPreorder& base, uint64_t mask) {
  uint64_t out = mask;
  for (int y = 0; y < base.size(); ++y) {
    if (out >> y & 1) continue;
    bool inside = false;
    for (int x = 0; x < base.size() && !inside; ++x)
      if (mask >> x & 1)
        for (int z = 0; z < base.size() && !inside; ++z)
          inside = (mask >> z & 1) && base.leq(x, y) && base.leq(y, z);
    if (inside) out |= uint64_t{1} << y;
  }
  return out;
}

/// Weak connected components: representative index per element, with
/// the least element id as the component name.
inline std::pair<std::vector<int>, std::vector<int>> weak_components(const FinPreorder& a) {
  const int n = a.size();
  std::vector<int> parent(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.leq(i, j)) {
        int ri = find(i), rj = find(j);
        if (ri != rj) parent[static_cast<size_t>(ri)] = rj;
      }
  std::vector<int> comp(static_cast<size_t>(n), -1), reps;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    bool fresh = true;
    for (size_t c = 0; c < reps.size(); ++c)
      if (find(reps[c]) == r) {
        comp[static_cast<size_t>(i)] = static_cast<int>(c);
        if (a.elem(i) < a.elem(reps[c])) reps[c] = i;
        fresh = false;
        break;
      }
    if (fresh) {
      comp[static_cast<size_t>(i)] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  return {std::move(comp), std::move(reps)};
}

}  // namespace detail

inline AppliedFunctor apply_functor_ob(const FunctorExpr& t, const FinPreorder& a,
                                       const SizeCaps& caps = {});

namespace detail {

inline AppliedFunctor powerset_ob(const FinPreorder& a, bool convex, const SizeCaps& caps,
                                  const char* what) {
  if (convex && !a.is_poset())
    fail(Err::ConvexOverPreorder, "convex powerset needs a poset carrier");
  check_set_layer_cap(a.size(), caps, what);
  std::vector<uint64_t> masks;
  const uint64_t limit = uint64_t{1} << a.size();
  for (uint64_t mask = 0; mask < limit; ++mask)
    if (!convex || is_convex_mask(a, mask)) masks.push_back(mask);
  std::vector<std::string> elems;
  std::vector<TElem> telems;
  for (uint64_t mask : masks) {
    std::vector<TElem> members;
    for (int i = 0; i < a.size(); ++i)
      if (mask >> i & 1) members.push_back(TElem::ident(a.elem(i)));
    TElem e = convex ? TElem::convex(std::move(members)) : TElem::subset(std::move(members));
    elems.push_back(e.str());
    telems.push_back(std::move(e));
  }
  const int n = static_cast<int>(masks.size());
  std::vector<bool> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      flat[static_cast<size_t>(i) * n + j] =
          em_leq(a, masks[static_cast<size_t>(i)], masks[static_cast<size_t>(j)]);
  return {FinPreorder::from_closed(std::move(elems), std::move(flat)), std::move(telems)};
}

}  // namespace detail

inline FunctorExpr up_expansion(const FunctorExpr& t) {
  // U T = dual(L(dual(T))); the uppersets ordered by reversed inclusion.
  return FunctorExpr::dual(FunctorExpr::low(FunctorExpr::dual(t.kid(0))));
}

inline AppliedFunctor apply_functor_ob(const FunctorExpr& t, const FinPreorder& a,
                                       const SizeCaps& caps) {
  using Tag = FunctorExpr::Tag;
  if (set_layer_depth(t) >= 2 && a.size() > caps.nested_base)
    fail(Err::SizeCapExceeded, "carrier of " + std::to_string(a.size()) +
                                   " elements under two nested set layers exceeds cap " +
                                   std::to_string(caps.nested_base));
  switch (t.tag()) {
    case Tag::Id: {
      std::vector<TElem> telems;
      for (int i = 0; i < a.size(); ++i) telems.push_back(TElem::ident(a.elem(i)));
      return {a, std::move(telems)};
    }
    case Tag::Const: {
      const FinPreorder& x = t.const_value();
      std::vector<std::string> elems;
      std::vector<TElem> telems;
      for (int i = 0; i < x.size(); ++i) {
        TElem e = TElem::constant(t.const_name(), x.elem(i));
        elems.push_back(e.str());
        telems.push_back(std::move(e));
      }
      const int n = x.size();
      std::vector<bool> flat(static_cast<size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = x.leq(i, j);
      return {FinPreorder::from_closed(std::move(elems), std::move(flat)), std::move(telems)};
    }
    case Tag::Dual: {
      AppliedFunctor inner = apply_functor_ob(t.kid(0), opposite(a), caps);
      std::vector<TElem> telems;
      telems.reserve(inner.elems.size());
      for (TElem& e : inner.elems) telems.push_back(TElem::dual(std::move(e)));
      return {opposite(inner.object), std::move(telems)};
    }
    case Tag::Sum: {
      AppliedFunctor l = apply_functor_ob(t.kid(0), a, caps);
      AppliedFunctor r = apply_functor_ob(t.kid(1), a, caps);
      std::vector<std::string> elems;
      std::vector<TElem> telems;
      for (TElem& e : l.elems) {
        TElem w = TElem::inl(std::move(e));
        elems.push_back(w.str());
        telems.push_back(std::move(w));
      }
      for (TElem& e : r.elems) {
        TElem w = TElem::inr(std::move(e));
        elems.push_back(w.str());
        telems.push_back(std::move(w));
      }
      const int nl = l.object.size(), n = nl + r.object.size();
      std::vector<bool> flat(static_cast<size_t>(n) * n);
      for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j) flat[static_cast<size_t>(i) * n + j] = l.object.leq(i, j);
      for (int i = 0; i < r.object.size(); ++i)
        for (int j = 0; j < r.object.size(); ++j)
          flat[static_cast<size_t>(nl + i) * n + (nl + j)] = r.object.leq(i, j);
      return {FinPreorder::from_closed(std::move(elems), std::move(flat)), std::move(telems)};
    }
    case Tag::Prod: {
      AppliedFunctor l = apply_functor_ob(t.kid(0), a, caps);
      AppliedFunctor r = apply_functor_ob(t.kid(1), a, caps);
      std::vector<std::string> elems;
      std::vector<TElem> telems;
      for (int i = 0; i < l.object.size(); ++i)
        for (int j = 0; j < r.object.size(); ++j) {
          TElem w = TElem::pair(l.elems[static_cast<size_t>(i)], r.elems[static_cast<size_t>(j)]);
          elems.push_back(w.str());
          telems.push_back(std::move(w));
        }
      const int nr = r.object.size(), n = l.object.size() * nr;
      std::vector<bool> flat(static_cast<size_t>(n) * n);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          flat[static_cast<size_t>(p) * n + q] =
              l.object.leq(p / nr, q / nr) && r.object.leq(p % nr, q % nr);
      return {FinPreorder::from_closed(std::move(elems), std::move(flat)), std::move(telems)};
    }
    case Tag::Low: {
      AppliedFunctor inner = apply_functor_ob(t.kid(0), a, caps);
      detail::check_set_layer_cap(inner.object.size(), caps, "lowerset layer");
      LowersetFamily fam = enumerate_lowersets(inner.object, caps.set_layer_arg);
      std::vector<TElem> telems;
      for (uint64_t mask : fam.masks) {
        std::vector<TElem> members;
        for (int i = 0; i < inner.object.size(); ++i)
          if (mask >> i & 1) members.push_back(inner.elems[static_cast<size_t>(i)]);
        telems.push_back(TElem::downset(std::move(members)));
      }
      return {fam.object, std::move(telems)};
    }
    case Tag::Up:
      return apply_functor_ob(up_expansion(t), a, caps);
    case Tag::Pow:
      return detail::powerset_ob(a, false, caps, "powerset layer");
    case Tag::PowFin:
      return detail::powerset_ob(a, false, caps, "finitary powerset layer");
    case Tag::PowConvex:
      return detail::powerset_ob(a, true, caps, "convex powerset layer");
    case Tag::PowConvexFin:
      return detail::powerset_ob(a, true, caps, "finitary convex powerset layer");
    case Tag::ConnComp: {
      auto [comp, reps] = detail::weak_components(a);
      std::vector<std::string> elems;
      std::vector<TElem> telems;
      for (int r : reps) {
        TElem e = TElem::component(a.elem(r));
        elems.push_back(e.str());
        telems.push_back(std::move(e));
      }
      const int n = static_cast<int>(reps.size());
      std::vector<bool> flat(static_cast<size_t>(n) * n, false);
      for (int i = 0; i < n; ++i) flat[static_cast<size_t>(i) * n + i] = true;
      return {FinPreorder::from_closed(std::move(elems), std::move(flat)), std::move(telems)};
    }
  }
  fail(Err::BadArtifact, "unknown functor tag");
}

inline MonotoneMap apply_functor_mor(const FunctorExpr& t, const MonotoneMap& f,
                                     const SizeCaps& caps = {}) {
  using Tag = FunctorExpr::Tag;
  switch (t.tag()) {
    case Tag::Id:
      return f;
    case Tag::Const: {
      AppliedFunctor x = apply_functor_ob(t, f.dom(), caps);
      return MonotoneMap::identity(x.object);
    }
    case Tag::Dual: {
      MonotoneMap inner = apply_functor_mor(t.kid(0), opposite_map(f), caps);
      return MonotoneMap(opposite(inner.dom()), opposite(inner.cod()), inner.table());
    }
    case Tag::Sum: {
      MonotoneMap l = apply_functor_mor(t.kid(0), f, caps);
      MonotoneMap r = apply_functor_mor(t.kid(1), f, caps);
      AppliedFunctor dom = apply_functor_ob(t, f.dom(), caps);
      AppliedFunctor cod = apply_functor_ob(t, f.cod(), caps);
      std::vector<int> table(static_cast<size_t>(dom.object.size()));
      const int nl = l.dom().size();
      for (int i = 0; i < dom.object.size(); ++i)
        table[static_cast<size_t>(i)] =
            i < nl ? l.apply(i) : l.cod().size() + r.apply(i - nl);
      return MonotoneMap(dom.object, cod.object, std::move(table));
    }
    case Tag::Prod: {
      MonotoneMap l = apply_functor_mor(t.kid(0), f, caps);
      MonotoneMap r = apply_functor_mor(t.kid(1), f, caps);
      AppliedFunctor dom = apply_functor_ob(t, f.dom(), caps);
      AppliedFunctor cod = apply_functor_ob(t, f.cod(), caps);
      std::vector<int> table(static_cast<size_t>(dom.object.size()));
      const int nr = r.dom().size(), mr = r.cod().size();
      for (int p = 0; p < dom.object.size(); ++p)
        table[static_cast<size_t>(p)] = l.apply(p / nr) * mr + r.apply(p % nr);
      return MonotoneMap(dom.object, cod.object, std::move(table));
    }
    case Tag::Low: {
      MonotoneMap inner = apply_functor_mor(t.kid(0), f, caps);
      detail::check_set_layer_cap(inner.dom().size(), caps, "lowerset layer");
      detail::check_set_layer_cap(inner.cod().size(), caps, "lowerset layer");
      return lowerset_map(inner, caps.set_layer_arg);
    }
    case Tag::Up:
      return apply_functor_mor(up_expansion(t), f, caps);
    case Tag::Pow:
    case Tag::PowFin:
    case Tag::PowConvex:
    case Tag::PowConvexFin: {
      const bool convex = t.tag() == Tag::PowConvex || t.tag() == Tag::PowConvexFin;
      AppliedFunctor dom = apply_functor_ob(t, f.dom(), caps);
      AppliedFunctor cod = apply_functor_ob(t, f.cod(), caps);
      // Recover masks from the enumeration order: powerset_ob walks
      // masks in increasing value, so rebuild the same sequence.
      std::vector<uint64_t> dom_masks, cod_masks;
      std::map<uint64_t, int> cod_index;
      {
        const uint64_t dlimit = uint64_t{1} << f.dom().size();
        for (uint64_t m = 0; m < dlimit; ++m)
          if (!convex || detail::is_convex_mask(f.dom(), m)) dom_masks.push_back(m);
        const uint64_t climit = uint64_t{1} << f.cod().size();
        for (uint64_t m = 0; m < climit; ++m)
          if (!convex || detail::is_convex_mask(f.cod(), m)) cod_masks.push_back(m);
        for (size_t i = 0; i < cod_masks.size(); ++i)
          cod_index.emplace(cod_masks[i], static_cast<int>(i));
      }
      std::vector<int> table(dom_masks.size());
      for (size_t i = 0; i < dom_masks.size(); ++i) {
        uint64_t image = 0;
        for (int x = 0; x < f.dom().size(); ++x)
          if (dom_masks[i] >> x & 1) image |= uint64_t{1} << f.apply(x);
        if (convex) image = detail::convex_hull_mask(f.cod(), image);
        table[i] = cod_index.at(image);
      }
      return MonotoneMap(dom.object, cod.object, std::move(table));
    }
    case Tag::ConnComp: {
      AppliedFunctor dom = apply_functor_ob(t, f.dom(), caps);
      AppliedFunctor cod = apply_functor_ob(t, f.cod(), caps);
      auto [dcomp, dreps] = detail::weak_components(f.dom());
      auto [ccomp, creps] = detail::weak_components(f.cod());
      std::vector<int> table(dreps.size());
      for (size_t c = 0; c < dreps.size(); ++c)
        table[c] = ccomp[static_cast<size_t>(f.apply(dreps[c]))];
      return MonotoneMap(dom.object, cod.object, std::move(table));
    }
  }
  fail(Err::BadArtifact, "unknown functor tag");
}

/// Relation lifting through the span presentation: take the fibration
/// of R, apply T to both legs, and read the composite back off.
inline MonotoneRelation lift_relation(const FunctorExpr& t, const MonotoneRelation& r,
                                      const SizeCaps& caps = {}) {
  Span span = relation_to_fibration(r);
  MonotoneMap td0 = apply_functor_mor(t, span.d0, caps);
  MonotoneMap td1 = apply_functor_mor(t, span.d1, caps);
  return compose_rel(diamond_low(td0), diamond_up(td1));
}

enum class PowVariant { Full, Finitary, Convex, ConvexFinitary };

inline FunctorExpr pow_variant_expr(PowVariant v) {
  switch (v) {
    case PowVariant::Full: return FunctorExpr::pow();
    case PowVariant::Finitary: return FunctorExpr::pow_fin();
    case PowVariant::Convex: return FunctorExpr::pow_convex();
    case PowVariant::ConvexFinitary: return FunctorExpr::pow_convex_fin();
  }
  fail(Err::BadArtifact, "unknown powerset variant");
}

/// Direct quantifier form of the powerset lifting, bypassing the span
/// machinery entirely: subsets S of the src and T of the dst are
/// related iff every a in S sees some b in T with R(b,a) and every b in
/// T is seen from some a in S.
inline MonotoneRelation lift_powerset_oracle(PowVariant v, const MonotoneRelation& r,
                                             const SizeCaps& caps = {}) {
  const bool convex = v == PowVariant::Convex || v == PowVariant::ConvexFinitary;
  AppliedFunctor ta = apply_functor_ob(pow_variant_expr(v), r.src(), caps);
  AppliedFunctor tb = apply_functor_ob(pow_variant_expr(v), r.dst(), caps);
  std::vector<uint64_t> amasks, bmasks;
  {
    const uint64_t alimit = uint64_t{1} << r.src().size();
    for (uint64_t m = 0; m < alimit; ++m)
      if (!convex || detail::is_convex_mask(r.src(), m)) amasks.push_back(m);
    const uint64_t blimit = uint64_t{1} << r.dst().size();
    for (uint64_t m = 0; m < blimit; ++m)
      if (!convex || detail::is_convex_mask(r.dst(), m)) bmasks.push_back(m);
  }
  std::vector<bool> mat(amasks.size() * bmasks.size());
  for (size_t sb = 0; sb < bmasks.size(); ++sb)
    for (size_t sa = 0; sa < amasks.size(); ++sa) {
      bool ok = true;
      for (int a = 0; a < r.src().size() && ok; ++a) {
        if (!(amasks[sa] >> a & 1)) continue;
        bool hit = false;
        for (int b = 0; b < r.dst().size() && !hit; ++b)
          hit = (bmasks[sb] >> b & 1) && r.at(b, a);
        ok = hit;
      }
      for (int b = 0; b < r.dst().size() && ok; ++b) {
        if (!(bmasks[sb] >> b & 1)) continue;
        bool hit = false;
        for (int a = 0; a < r.src().size() && !hit; ++a)
          hit = (amasks[sa] >> a & 1) && r.at(b, a);
        ok = hit;
      }
      mat[sb * amasks.size() + sa] = ok;
    }
  return MonotoneRelation::checked(ta.object, tb.object, std::move(mat));
}

/// Direct quantifier form of the lowerset lifting: downsets W of the
/// src and V of the dst are related iff every b in V admits a related
/// pair (b1,a1) with b <= b1 and a1 in W.
inline MonotoneRelation lift_lowerset_oracle(const MonotoneRelation& r, const SizeCaps& caps = {}) {
  detail::check_set_layer_cap(r.src().size(), caps, "lowerset layer");
  detail::check_set_layer_cap(r.dst().size(), caps, "lowerset layer");
  LowersetFamily la = enumerate_lowersets(r.src(), caps.set_layer_arg);
  LowersetFamily lb = enumerate_lowersets(r.dst(), caps.set_layer_arg);
  std::vector<bool> mat(la.masks.size() * lb.masks.size());
  for (size_t v = 0; v < lb.masks.size(); ++v)
    for (size_t w = 0; w < la.masks.size(); ++w) {
      bool ok = true;
      for (int b = 0; b < r.dst().size() && ok; ++b) {
        if (!(lb.masks[v] >> b & 1)) continue;
        bool hit = false;
        for (int b1 = 0; b1 < r.dst().size() && !hit; ++b1)
          for (int a1 = 0; a1 < r.src().size() && !hit; ++a1)
            hit = r.at(b1, a1) && r.dst().leq(b, b1) && (la.masks[w] >> a1 & 1);
        ok = hit;
      }
      mat[v * la.masks.size() + w] = ok;
    }
  return MonotoneRelation::checked(la.object, lb.object, std::move(mat));
}

/// Distributive-law component T(L(A)) -> L(T(A)): an element t of
/// T(L(A)) maps to the downset of all s in T(A) that the lifted
/// lowerset elementhood relates to t.
inline MonotoneMap dist_law(const FunctorExpr& t, const FinPreorder& a, const SizeCaps& caps = {}) {
  detail::check_set_layer_cap(a.size(), caps, "lowerset layer");
  LowersetFamily la = enumerate_lowersets(a, caps.set_layer_arg);
  MonotoneRelation elem = lowerset_elementhood(a, caps.set_layer_arg);
  MonotoneRelation lifted = lift_relation(t, elem, caps);
  AppliedFunctor ta = apply_functor_ob(t, a, caps);
  detail::check_set_layer_cap(ta.object.size(), caps, "lowerset layer");
  LowersetFamily lta = enumerate_lowersets(ta.object, caps.set_layer_arg);
  std::vector<int> table(static_cast<size_t>(lifted.src().size()));
  for (int i = 0; i < lifted.src().size(); ++i) {
    uint64_t mask = 0;
    for (int s = 0; s < ta.object.size(); ++s)
      if (lifted.at(s, i)) mask |= uint64_t{1} << s;
    table[static_cast<size_t>(i)] = lta.index_of(mask);
  }
  return MonotoneMap(lifted.src(), lta.object, std::move(table));
}

}  // namespace relift
