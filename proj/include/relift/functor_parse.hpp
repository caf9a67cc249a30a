#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "relift/errors.hpp"
#include "relift/functor.hpp"

namespace relift {

using Registry = std::map<std::string, FinPreorder>;

namespace detail {

/// Recursive-descent parser for the functor grammar
///   T ::= const(NAME) | Id | dual(T) | T + T | T * T | L T | U T
///       | P | Pw | Pc | Pcw | CC
/// with * binding tighter than + and prefix L/U tighter still.
class FunctorParser {
 public:
  FunctorParser(std::string_view src, const Registry& registry)
      : src_(src), registry_(registry) {}

  FunctorExpr parse() {
    FunctorExpr t = parse_sum();
    skip_ws();
    if (pos_ != src_.size()) err("trailing input");
    return t;
  }

 private:
  [[noreturn]] void err(const std::string& what) {
    fail(Err::ParseError, what + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) err(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    if (start == pos_) err("expected an identifier");
    return std::string(src_.substr(start, pos_ - start));
  }

  FunctorExpr parse_sum() {
    FunctorExpr t = parse_prod();
    while (eat('+')) t = FunctorExpr::sum(std::move(t), parse_prod());
    return t;
  }

  FunctorExpr parse_prod() {
    FunctorExpr t = parse_unary();
    while (eat('*')) t = FunctorExpr::prod(std::move(t), parse_unary());
    return t;
  }

  FunctorExpr parse_unary() {
    skip_ws();
    if (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      size_t save = pos_;
      std::string word = ident();
      if (word == "L") return FunctorExpr::low(parse_unary());
      if (word == "U") return FunctorExpr::up(parse_unary());
      pos_ = save;
    }
    return parse_primary();
  }

  FunctorExpr parse_primary() {
    skip_ws();
    if (eat('(')) {
      FunctorExpr t = parse_sum();
      expect(')');
      return t;
    }
    size_t at = pos_;
    std::string word = ident();
    if (word == "Id") return FunctorExpr::id();
    if (word == "P") return FunctorExpr::pow();
    if (word == "Pw") return FunctorExpr::pow_fin();
    if (word == "Pc") return FunctorExpr::pow_convex();
    if (word == "Pcw") return FunctorExpr::pow_convex_fin();
    if (word == "CC") return FunctorExpr::conn_comp();
    if (word == "dual") {
      expect('(');
      FunctorExpr body = parse_sum();
      expect(')');
      return FunctorExpr::dual(std::move(body));
    }
    if (word == "const") {
      expect('(');
      std::string name = ident();
      expect(')');
      auto it = registry_.find(name);
      if (it == registry_.end()) fail(Err::UnknownConst, "'" + name + "' is not registered");
      return FunctorExpr::constant(name, it->second);
    }
    pos_ = at;
    err("expected a functor");
  }

  std::string_view src_;
  const Registry& registry_;
  size_t pos_ = 0;
};

/// Splits "a,b,c" at top-level commas, treating (), {} as nesting.
inline std::vector<std::string> split_top_level(std::string_view body) {
  std::vector<std::string> parts;
  if (body.empty()) return parts;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      parts.emplace_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.emplace_back(body.substr(start));
  return parts;
}

inline bool strip_wrapper(std::string_view lit, std::string_view open, char close,
                          std::string_view& body) {
  if (lit.size() < open.size() + 1 || lit.substr(0, open.size()) != open || lit.back() != close)
    return false;
  body = lit.substr(open.size(), lit.size() - open.size() - 1);
  return true;
}

}  // namespace detail

inline FunctorExpr parse_functor(std::string_view src, const Registry& registry = {}) {
  return detail::FunctorParser(src, registry).parse();
}

/// Parses one element literal of T(A). The literal grammar follows the
/// expression structure:
///   Id            a raw carrier element id
///   const(X)      "k:X:elem"
///   dual(T)       the body literal (the wrapper is order-only)
///   T1 + T2       "inl:lit" or "inr:lit"
///   T1 * T2       "(lit,lit)"
///   L T           "v{lit,...}", members must form a downset
///   P, Pw         "{elem,...}"
///   Pc, Pcw       "{elem,...}", canonicalized to its convex hull
///   CC            any carrier element id, normalized to its component
inline TElem parse_telem(const FunctorExpr& t, const FinPreorder& a, std::string_view lit,
                         const SizeCaps& caps = {}) {
  using Tag = FunctorExpr::Tag;
  auto bad = [&](const std::string& what) -> void {
    fail(Err::BadArtifact, "element literal '" + std::string(lit) + "': " + what);
  };
  switch (t.tag()) {
    case Tag::Id: {
      if (!a.contains(std::string(lit))) bad("not a carrier element");
      return TElem::ident(std::string(lit));
    }
    case Tag::Const: {
      std::string prefix = "k:" + t.const_name() + ":";
      if (lit.substr(0, prefix.size()) != prefix) bad("expected prefix '" + prefix + "'");
      std::string elem(lit.substr(prefix.size()));
      if (!t.const_value().contains(elem)) bad("not an element of " + t.const_name());
      return TElem::constant(t.const_name(), std::move(elem));
    }
    case Tag::Dual:
      return TElem::dual(parse_telem(t.kid(0), opposite(a), lit, caps));
    case Tag::Sum: {
      if (lit.substr(0, 4) == "inl:") return TElem::inl(parse_telem(t.kid(0), a, lit.substr(4), caps));
      if (lit.substr(0, 4) == "inr:") return TElem::inr(parse_telem(t.kid(1), a, lit.substr(4), caps));
      bad("expected 'inl:' or 'inr:'");
    }
    case Tag::Prod: {
      std::string_view body;
      if (!detail::strip_wrapper(lit, "(", ')', body)) bad("expected '(lit,lit)'");
      std::vector<std::string> parts = detail::split_top_level(body);
      if (parts.size() != 2) bad("expected exactly two components");
      return TElem::pair(parse_telem(t.kid(0), a, parts[0], caps),
                         parse_telem(t.kid(1), a, parts[1], caps));
    }
    case Tag::Low: {
      std::string_view body;
      if (!detail::strip_wrapper(lit, "v{", '}', body)) bad("expected 'v{...}'");
      AppliedFunctor inner = apply_functor_ob(t.kid(0), a, caps);
      uint64_t mask = 0;
      std::vector<TElem> members;
      for (const std::string& part : detail::split_top_level(body)) {
        TElem m = parse_telem(t.kid(0), a, part, caps);
        mask |= uint64_t{1} << inner.index_of(m);
        members.push_back(std::move(m));
      }
      if (!is_down_closed(inner.object, mask)) bad("members do not form a downset");
      return TElem::downset(std::move(members));
    }
    case Tag::Up:
      return parse_telem(up_expansion(t), a, lit, caps);
    case Tag::Pow:
    case Tag::PowFin:
    case Tag::PowConvex:
    case Tag::PowConvexFin: {
      const bool convex = t.tag() == Tag::PowConvex || t.tag() == Tag::PowConvexFin;
      if (convex && !a.is_poset())
        fail(Err::ConvexOverPreorder, "convex powerset needs a poset carrier");
      std::string_view body;
      if (!detail::strip_wrapper(lit, "{", '}', body)) bad("expected '{...}'");
      uint64_t mask = 0;
      for (const std::string& part : detail::split_top_level(body)) {
        if (!a.contains(part)) bad("'" + part + "' is not a carrier element");
        mask |= uint64_t{1} << a.index(part);
      }
      if (convex) mask = detail::convex_hull_mask(a, mask);
      std::vector<TElem> members;
      for (int i = 0; i < a.size(); ++i)
        if (mask >> i & 1) members.push_back(TElem::ident(a.elem(i)));
      return convex ? TElem::convex(std::move(members)) : TElem::subset(std::move(members));
    }
    case Tag::ConnComp: {
      if (!a.contains(std::string(lit))) bad("not a carrier element");
      auto [comp, reps] = detail::weak_components(a);
      return TElem::component(a.elem(reps[static_cast<size_t>(
          comp[static_cast<size_t>(a.index(std::string(lit)))])]));
    }
  }
  fail(Err::BadArtifact, "unknown functor tag");
}

}  // namespace relift
