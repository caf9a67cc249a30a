#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "relift/errors.hpp"
#include "relift/functor.hpp"
#include "relift/functor_parse.hpp"
#include "relift/preorder.hpp"
#include "relift/relation.hpp"

namespace relift {

struct Coalgebra {
  FinPreorder carrier;
  FunctorExpr functor;
  MonotoneMap xi;  // carrier -> T(carrier)
};

inline Coalgebra mk_coalgebra(FinPreorder carrier, FunctorExpr functor, MonotoneMap xi,
                              const SizeCaps& caps = {}) {
  if (xi.dom() != carrier) fail(Err::DomainMismatch, "structure map domain is not the carrier");
  AppliedFunctor tx = apply_functor_ob(functor, carrier, caps);
  if (xi.cod() != tx.object)
    fail(Err::CodomainMismatch, "structure map codomain is not the functor applied to the carrier");
  return {std::move(carrier), std::move(functor), std::move(xi)};
}

/// Builds the structure map from element literals.
inline Coalgebra mk_coalgebra(FinPreorder carrier, FunctorExpr functor,
                              const std::vector<std::pair<std::string, std::string>>& xi_literals,
                              const SizeCaps& caps = {}) {
  AppliedFunctor tx = apply_functor_ob(functor, carrier, caps);
  std::vector<int> table(static_cast<size_t>(carrier.size()), -1);
  for (const auto& [elem, lit] : xi_literals) {
    int a = carrier.index(elem);
    if (table[static_cast<size_t>(a)] != -1)
      fail(Err::BadArtifact, "duplicate structure entry for '" + elem + "'");
    table[static_cast<size_t>(a)] = tx.index_of(parse_telem(functor, carrier, lit, caps));
  }
  for (int a = 0; a < carrier.size(); ++a)
    if (table[static_cast<size_t>(a)] == -1)
      fail(Err::BadArtifact, "missing structure entry for '" + carrier.elem(a) + "'");
  MonotoneMap xi(carrier, tx.object, std::move(table));
  return {std::move(carrier), std::move(functor), std::move(xi)};
}

/// One step of the simulation operator: Phi(R)(x2,x1) is the lifted
/// relation evaluated at the two successor structures.
inline MonotoneRelation simulation_step(const Coalgebra& c1, const Coalgebra& c2,
                                        const MonotoneRelation& r, const SizeCaps& caps = {}) {
  MonotoneRelation lifted = lift_relation(c1.functor, r, caps);
  const FinPreorder& x1 = c1.carrier;
  const FinPreorder& x2 = c2.carrier;
  std::vector<bool> mat(static_cast<size_t>(x2.size()) * x1.size());
  for (int b = 0; b < x2.size(); ++b)
    for (int a = 0; a < x1.size(); ++a)
      mat[static_cast<size_t>(b) * x1.size() + a] = lifted.at(c2.xi.apply(b), c1.xi.apply(a));
  return MonotoneRelation::checked(x1, x2, std::move(mat));
}

/// Greatest monotone relation R: X1 -|-> X2 with R <= Phi(R), by Kleene
/// iteration from the top relation with pointwise meet. Terminates on
/// the finite descending chain; the meet of monotone relations is
/// monotone, so each iterate revalidates for free.
inline MonotoneRelation simulation_gfp(const Coalgebra& c1, const Coalgebra& c2,
                                       const SizeCaps& caps = {}) {
  if (c1.functor != c2.functor) fail(Err::FunctorMismatch, "coalgebras use different functors");
  MonotoneRelation r = MonotoneRelation::top(c1.carrier, c2.carrier);
  for (;;) {
    MonotoneRelation next = meet_rel(r, simulation_step(c1, c2, r, caps));
    if (next == r) return r;
    r = std::move(next);
  }
}

/// Modal formulas: propositional connectives plus the nabla modality.
/// A nabla node carries labeled immediate subformulas and a payload
/// literal denoting an element of the functor applied to the discrete
/// preorder of those labels.
class Formula {
 public:
  enum class Tag { Top, Bot, And, Or, Nabla };

  static Formula top() { return Formula(Tag::Top); }
  static Formula bot() { return Formula(Tag::Bot); }
  static Formula conj(Formula l, Formula r) { return binary(Tag::And, std::move(l), std::move(r)); }
  static Formula disj(Formula l, Formula r) { return binary(Tag::Or, std::move(l), std::move(r)); }
  static Formula nabla(std::string payload, std::vector<std::pair<std::string, Formula>> subs) {
    Formula f(Tag::Nabla);
    f.payload_ = std::move(payload);
    std::sort(subs.begin(), subs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < subs.size(); ++i)
      if (subs[i].first == subs[i - 1].first)
        fail(Err::BadArtifact, "duplicate subformula label '" + subs[i].first + "'");
    f.subs_ = std::move(subs);
    return f;
  }

  Tag tag() const { return tag_; }
  const Formula& kid(int i) const { return kids_[static_cast<size_t>(i)]; }
  const std::string& payload() const { return payload_; }
  const std::vector<std::pair<std::string, Formula>>& subs() const { return subs_; }

 private:
  explicit Formula(Tag tag) : tag_(tag) {}
  static Formula binary(Tag tag, Formula l, Formula r) {
    Formula f(tag);
    f.kids_.push_back(std::move(l));
    f.kids_.push_back(std::move(r));
    return f;
  }

  Tag tag_;
  std::vector<Formula> kids_;
  std::string payload_;
  std::vector<std::pair<std::string, Formula>> subs_;
};

inline FinPreorder discrete_preorder(std::vector<std::string> elems) {
  const int n = static_cast<int>(elems.size());
  std::vector<bool> flat(static_cast<size_t>(n) * n, false);
  for (int i = 0; i < n; ++i) flat[static_cast<size_t>(i) * n + i] = true;
  return FinPreorder::from_closed(std::move(elems), std::move(flat));
}

namespace detail {

inline std::vector<bool> eval_formula(const Coalgebra& c, const Formula& phi, const SizeCaps& caps) {
  const FinPreorder& x = c.carrier;
  switch (phi.tag()) {
    case Formula::Tag::Top:
      return std::vector<bool>(static_cast<size_t>(x.size()), true);
    case Formula::Tag::Bot:
      return std::vector<bool>(static_cast<size_t>(x.size()), false);
    case Formula::Tag::And: {
      std::vector<bool> l = eval_formula(c, phi.kid(0), caps);
      std::vector<bool> r = eval_formula(c, phi.kid(1), caps);
      for (size_t i = 0; i < l.size(); ++i) l[i] = l[i] && r[i];
      return l;
    }
    case Formula::Tag::Or: {
      std::vector<bool> l = eval_formula(c, phi.kid(0), caps);
      std::vector<bool> r = eval_formula(c, phi.kid(1), caps);
      for (size_t i = 0; i < l.size(); ++i) l[i] = l[i] || r[i];
      return l;
    }
    case Formula::Tag::Nabla: {
      std::vector<std::string> labels;
      labels.reserve(phi.subs().size());
      for (const auto& [label, sub] : phi.subs()) labels.push_back(label);
      FinPreorder disc = discrete_preorder(labels);
      // Forcing relation from the discrete label preorder to X^op;
      // satisfaction sets are up-closed, which is exactly the bimodule
      // law on this shape.
      std::vector<bool> fmat(static_cast<size_t>(x.size()) * disc.size());
      for (int l = 0; l < disc.size(); ++l) {
        std::vector<bool> sat = eval_formula(c, phi.subs()[static_cast<size_t>(l)].second, caps);
        for (int s = 0; s < x.size(); ++s)
          fmat[static_cast<size_t>(s) * disc.size() + l] = sat[static_cast<size_t>(s)];
      }
      MonotoneRelation forcing =
          MonotoneRelation::checked(disc, opposite(x), std::move(fmat));
      FunctorExpr dual_t = FunctorExpr::dual(c.functor);
      MonotoneRelation lifted = lift_relation(dual_t, forcing, caps);
      // Payload indices live in T applied to the labels; the dual
      // wrapper only flips orders, ids coincide.
      TElem alpha = parse_telem(c.functor, disc, phi.payload(), caps);
      int ai = lifted.src().index(alpha.str());
      std::vector<bool> sat(static_cast<size_t>(x.size()));
      for (int s = 0; s < x.size(); ++s) {
        int ti = lifted.dst().index(c.xi.cod().elem(c.xi.apply(s)));
        sat[static_cast<size_t>(s)] = lifted.at(ti, ai);
      }
      return sat;
    }
  }
  fail(Err::BadArtifact, "unknown formula tag");
}

}  // namespace detail

/// Satisfaction set of `phi`, as an indicator over the carrier.
/// The result is up-closed in the carrier order.
inline std::vector<bool> model_check(const Coalgebra& c, const Formula& phi,
                                     const SizeCaps& caps = {}) {
  std::vector<bool> sat = detail::eval_formula(c, phi, caps);
  for (int a = 0; a < c.carrier.size(); ++a)
    for (int b = 0; b < c.carrier.size(); ++b)
      if (c.carrier.leq(a, b) && sat[static_cast<size_t>(a)])
        assert(sat[static_cast<size_t>(b)] && "satisfaction set must be up-closed");
  return sat;
}

inline std::vector<std::string> sat_elems(const Coalgebra& c, const std::vector<bool>& sat) {
  std::vector<std::string> out;
  for (int i = 0; i < c.carrier.size(); ++i)
    if (sat[static_cast<size_t>(i)]) out.push_back(c.carrier.elem(i));
  std::sort(out.begin(), out.end());
  return out;
}

/// Preimage action on uppersets: [f,2] maps V to f^-1(V).
inline MonotoneMap upperset_preimage_map(const MonotoneMap& f, int cap = kDefaultLowersetCap) {
  LowersetFamily ub = enumerate_lowersets(opposite(f.cod()), cap);
  LowersetFamily ua = enumerate_lowersets(opposite(f.dom()), cap);
  std::vector<int> table(ub.masks.size());
  for (size_t v = 0; v < ub.masks.size(); ++v) {
    uint64_t pre = 0;
    for (int a = 0; a < f.dom().size(); ++a)
      if (ub.masks[v] >> f.apply(a) & 1) pre |= uint64_t{1} << a;
    table[v] = ua.index_of(pre);
  }
  return MonotoneMap(ub.object, ua.object, std::move(table));
}

/// Logic transform: the dual functor applied to the uppersets of X,
/// into the uppersets of T(X). t maps to the set of all s that the
/// dual-lifted upperset elementhood relates to t.
inline MonotoneMap tau_transform(const FunctorExpr& t, const FinPreorder& x,
                                 const SizeCaps& caps = {}) {
  MonotoneRelation ni = elementhood(x, caps.lowerset);
  MonotoneRelation lifted = lift_relation(FunctorExpr::dual(t), ni, caps);
  AppliedFunctor tx = apply_functor_ob(t, x, caps);
  detail::check_set_layer_cap(tx.object.size(), caps, "upperset layer");
  LowersetFamily utx = enumerate_lowersets(opposite(tx.object), caps.set_layer_arg);
  std::vector<int> table(static_cast<size_t>(lifted.src().size()));
  for (int i = 0; i < lifted.src().size(); ++i) {
    uint64_t mask = 0;
    for (int s = 0; s < lifted.dst().size(); ++s)
      if (lifted.at(s, i)) mask |= uint64_t{1} << tx.object.index(lifted.dst().elem(s));
    table[static_cast<size_t>(i)] = utx.index_of(mask);
  }
  return MonotoneMap(lifted.src(), utx.object, std::move(table));
}

}  // namespace relift
