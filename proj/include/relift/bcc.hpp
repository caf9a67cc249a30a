#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relift/enumerate.hpp"
#include "relift/errors.hpp"
#include "relift/functor.hpp"
#include "relift/random.hpp"
#include "relift/square.hpp"

namespace relift {

struct BccConfig {
  uint64_t seed = 0;
  int max_size = 3;        // carrier bound for generated fixtures
  int per_family = 40;     // target instances per square family
  int lifting_pairs = 25;  // relation pairs for the functoriality check
  SizeCaps caps;
};

struct BccCounterexample {
  std::string family;
  std::string detail;
  std::optional<LaxSquare> image_square;  // the failing image, when square-shaped
  std::string witness_a, witness_b;
};

/// Outcome of the refutation suite. The condition under test is
/// universally quantified, so a clean run only ever reports that no
/// counterexample was found, never that the condition holds.
struct BccReport {
  std::string functor;
  uint64_t seed = 0;
  int max_size = 3;
  std::vector<std::pair<std::string, int>> pass_counts;
  int skipped_by_caps = 0;
  std::optional<BccCounterexample> counterexample;
  std::string summary;
};

namespace detail {

inline bool bcc_needs_poset(const FunctorExpr& t) {
  using Tag = FunctorExpr::Tag;
  if (t.tag() == Tag::PowConvex || t.tag() == Tag::PowConvexFin) return true;
  for (const FunctorExpr& k : t.kids())
    if (bcc_needs_poset(k)) return true;
  return false;
}

class BccRunner {
 public:
  BccRunner(const FunctorExpr& t, const BccConfig& cfg)
      : t_(t), cfg_(cfg), rng_(cfg.seed), posets_(bcc_needs_poset(t)) {}

  BccReport run() {
    run_family("embedding", [this](int i) { return embedding_case(i); });
    run_family("absolutely_dense", [this](int) { return absdense_case(); });
    run_family("adjunction_unit", [this](int) { return adjunction_case(); });
    run_family("comma", [this](int) { return comma_case(); });
    run_family("opcomma", [this](int) { return opcomma_case(); });
    run_family("yoneda", [this](int i) { return yoneda_case(i); });
    run_family("pullback_of_fibrations", [this](int) { return pullback_case(); });
    run_family("random_exact", [this](int) { return random_exact_case(); });
    lifting_family();
    report_.functor = t_.str();
    report_.seed = cfg_.seed;
    report_.max_size = cfg_.max_size;
    report_.summary = report_.counterexample
                          ? "counterexample found in family " + report_.counterexample->family
                          : "no counterexample found";
    return std::move(report_);
  }

 private:
  // A case either yields a source square known to be exact, or nothing
  // (generator miss). Returns false only when capped out.
  template <typename Fn>
  void run_family(const std::string& name, Fn make_case) {
    if (report_.counterexample) return;
    int passes = 0;
    int budget = cfg_.per_family * 25;
    for (int i = 0; passes < cfg_.per_family && budget > 0 && !report_.counterexample; ++i) {
      --budget;
      std::optional<LaxSquare> sq;
      try {
        sq = make_case(i);
      } catch (const Error& e) {
        if (e.code() == Err::SizeCapExceeded) {
          ++report_.skipped_by_caps;
          continue;
        }
        throw;
      }
      if (!sq) continue;
      if (check_image(name, *sq)) ++passes;
    }
    report_.pass_counts.emplace_back(name, passes);
  }

  bool check_image(const std::string& family, const LaxSquare& sq) {
    LaxSquare image;
    try {
      image = LaxSquare{apply_functor_mor(t_, sq.p0, cfg_.caps),
                        apply_functor_mor(t_, sq.p1, cfg_.caps),
                        apply_functor_mor(t_, sq.f, cfg_.caps),
                        apply_functor_mor(t_, sq.g, cfg_.caps)};
    } catch (const Error& e) {
      if (e.code() == Err::SizeCapExceeded) {
        ++report_.skipped_by_caps;
        return true;
      }
      throw;
    }
    if (!is_lax(image)) {
      report_.counterexample =
          BccCounterexample{family, "image of an exact square is not even lax", image, "", ""};
      return false;
    }
    if (auto witness = exactness_counterexample(image)) {
      report_.counterexample = BccCounterexample{
          family, "image of an exact square is not exact", image, witness->first, witness->second};
      return false;
    }
    return true;
  }

  FinPreorder carrier(const std::string& prefix) {
    return random_preorder(rng_, rng_.between(1, cfg_.max_size), prefix, posets_);
  }

  std::optional<LaxSquare> embedding_case(int i) {
    if (i == 0) {
      // Two incomparable points embedded under a common upper bound:
      // the minimal fixture that separates component-collapsing
      // functors from the rest.
      FinPreorder a = FinPreorder::from_pairs({"a", "b"}, {});
      FinPreorder b = FinPreorder::from_pairs({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
      MonotoneMap f = MonotoneMap::from_table(a, b, {{"a", "a"}, {"b", "b"}});
      return catalog_square(SquareKind::Embedding, {f});
    }
    FinPreorder b = carrier("b");
    // Induced suborder on a random subset: an embedding by construction.
    std::vector<int> picks;
    for (int x = 0; x < b.size(); ++x)
      if (rng_.flip(0.6)) picks.push_back(x);
    if (picks.empty()) return std::nullopt;
    std::vector<std::string> elems;
    for (int x : picks) elems.push_back("s" + b.elem(x));
    const int n = static_cast<int>(picks.size());
    std::vector<bool> flat(static_cast<size_t>(n) * n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        flat[static_cast<size_t>(p) * n + q] =
            b.leq(picks[static_cast<size_t>(p)], picks[static_cast<size_t>(q)]);
    FinPreorder a = FinPreorder::from_closed(std::move(elems), std::move(flat));
    MonotoneMap f(a, b, std::move(picks));
    return catalog_square(SquareKind::Embedding, {f});
  }

  std::optional<LaxSquare> absdense_case() {
    FinPreorder a = carrier("a");
    FinPreorder b = carrier("b");
    MonotoneMap e = random_monotone_map(rng_, a, b);
    if (!is_absolutely_dense(e)) return std::nullopt;
    return catalog_square(SquareKind::AbsDense, {e});
  }

  std::optional<LaxSquare> adjunction_case() {
    FinPreorder x = carrier("x");
    FinPreorder a = carrier("a");
    MonotoneMap f = random_monotone_map(rng_, x, a);
    std::optional<MonotoneMap> u = find_right_adjoint(f);
    if (!u) return std::nullopt;
    return catalog_square(SquareKind::AdjunctionUnit, {f, *u});
  }

  std::optional<LaxSquare> comma_case() {
    FinPreorder c = carrier("c");
    MonotoneMap f = random_monotone_map(rng_, carrier("a"), c);
    MonotoneMap g = random_monotone_map(rng_, carrier("b"), c);
    return catalog_square(SquareKind::Comma, {f, g});
  }

  std::optional<LaxSquare> opcomma_case() {
    FinPreorder c = carrier("c");
    MonotoneMap f = random_monotone_map(rng_, c, carrier("a"));
    MonotoneMap g = random_monotone_map(rng_, c, carrier("b"));
    return catalog_square(SquareKind::OpComma, {f, g});
  }

  std::optional<LaxSquare> yoneda_case(int i) {
    MonotoneMap f = random_monotone_map(rng_, carrier("a"), carrier("b"));
    return catalog_square(i % 2 ? SquareKind::YonedaLeft : SquareKind::YonedaRight, {f});
  }

  std::optional<LaxSquare> pullback_case() {
    FinPreorder a = carrier("a"), b = carrier("b"), c = carrier("c");
    Span es = relation_to_fibration(random_monotone_relation(rng_, b, c));
    Span er = relation_to_fibration(random_monotone_relation(rng_, a, b));
    TensorResult tensor = tensor_fibrations(es, er);
    return LaxSquare{tensor.pullback.d0, tensor.pullback.d1, es.d1, er.d0};
  }

  std::optional<LaxSquare> random_exact_case() {
    FinPreorder p = carrier("p"), a = carrier("a"), b = carrier("b"), c = carrier("c");
    LaxSquare sq{random_monotone_map(rng_, p, a), random_monotone_map(rng_, p, b),
                 random_monotone_map(rng_, a, c), random_monotone_map(rng_, b, c)};
    if (!is_lax(sq) || !is_exact_square(sq)) return std::nullopt;
    return sq;
  }

  void lifting_family() {
    if (report_.counterexample) return;
    int passes = 0;
    int budget = cfg_.lifting_pairs * 25;
    while (passes < cfg_.lifting_pairs && budget-- > 0) {
      FinPreorder a = carrier("a"), b = carrier("b"), c = carrier("c");
      try {
        MonotoneRelation r = random_monotone_relation(rng_, a, b);
        MonotoneRelation s = random_monotone_relation(rng_, b, c);
        MonotoneRelation lhs = lift_relation(t_, compose_rel(s, r), cfg_.caps);
        MonotoneRelation rhs =
            compose_rel(lift_relation(t_, s, cfg_.caps), lift_relation(t_, r, cfg_.caps));
        if (lhs != rhs) {
          report_.counterexample = BccCounterexample{
              "lifting_functoriality", "lifting does not preserve relation composition",
              std::nullopt, "", ""};
          return;
        }
        MonotoneRelation lid = lift_relation(t_, id_rel(a), cfg_.caps);
        if (lid != id_rel(apply_functor_ob(t_, a, cfg_.caps).object)) {
          report_.counterexample =
              BccCounterexample{"lifting_functoriality", "lifting does not preserve identities",
                                std::nullopt, "", ""};
          return;
        }
        ++passes;
      } catch (const Error& e) {
        if (e.code() == Err::SizeCapExceeded) {
          ++report_.skipped_by_caps;
          continue;
        }
        throw;
      }
    }
    report_.pass_counts.emplace_back("lifting_functoriality", passes);
  }

  const FunctorExpr& t_;
  BccConfig cfg_;
  Rng rng_;
  bool posets_;
  BccReport report_;
};

}  // namespace detail

inline BccReport check_bcc(const FunctorExpr& t, const BccConfig& cfg = {}) {
  return detail::BccRunner(t, cfg).run();
}

}  // namespace relift
