#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "relift/bcc.hpp"
#include "relift/coalgebra.hpp"
#include "relift/errors.hpp"
#include "relift/functor_parse.hpp"
#include "relift/preorder.hpp"
#include "relift/relation.hpp"
#include "relift/span.hpp"
#include "relift/square.hpp"

namespace relift {

using nlohmann::json;

inline constexpr const char* kSchemaTag = "relift/1";

namespace detail {

/// Strict mode: any key outside `allowed` is an error, so transposed
/// matrices and misspelled fields surface immediately.
inline void check_keys(const json& j, const std::set<std::string>& allowed,
                       const std::string& where, bool allow_schema = false) {
  if (!j.is_object()) fail(Err::BadArtifact, where + ": expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (allow_schema && it.key() == "schema") {
      if (!it.value().is_string() || it.value().get<std::string>() != kSchemaTag)
        fail(Err::BadArtifact, where + ": unsupported schema, expected \"" +
                                   std::string(kSchemaTag) + "\"");
      continue;
    }
    if (!allowed.count(it.key())) fail(Err::BadArtifact, where + ": unknown field '" + it.key() + "'");
  }
  for (const std::string& key : allowed)
    if (!j.contains(key)) fail(Err::BadArtifact, where + ": missing field '" + key + "'");
}

}  // namespace detail

inline json preorder_to_json(const FinPreorder& p) {
  json rows = json::array();
  for (int i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < p.size(); ++j) row.push_back(p.leq(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"elems", p.elems()}, {"leq", std::move(rows)}, {"poset", p.is_poset()}};
}

inline FinPreorder preorder_from_json(const json& j, const std::string& where = "preorder",
                                      bool root = false) {
  detail::check_keys(j, {"elems", "leq", "poset"}, where, root);
  std::vector<std::string> elems = j.at("elems").get<std::vector<std::string>>();
  std::vector<std::vector<bool>> rows = j.at("leq").get<std::vector<std::vector<bool>>>();
  return FinPreorder::from_matrix(std::move(elems), rows, j.at("poset").get<bool>());
}

inline json map_to_json(const MonotoneMap& f) {
  json table = json::object();
  for (int a = 0; a < f.dom().size(); ++a) table[f.dom().elem(a)] = f.cod().elem(f.apply(a));
  return json{{"dom", preorder_to_json(f.dom())},
              {"cod", preorder_to_json(f.cod())},
              {"table", std::move(table)}};
}

inline MonotoneMap map_from_json(const json& j, const std::string& where = "map",
                                 bool root = false) {
  detail::check_keys(j, {"dom", "cod", "table"}, where, root);
  FinPreorder dom = preorder_from_json(j.at("dom"), where + ".dom");
  FinPreorder cod = preorder_from_json(j.at("cod"), where + ".cod");
  std::unordered_map<std::string, std::string> table;
  for (auto it = j.at("table").begin(); it != j.at("table").end(); ++it)
    table[it.key()] = it.value().get<std::string>();
  return MonotoneMap::from_table(std::move(dom), std::move(cod), table);
}

inline json relation_to_json(const MonotoneRelation& r) {
  json rows = json::array();
  for (int b = 0; b < r.dst().size(); ++b) {
    json row = json::array();
    for (int a = 0; a < r.src().size(); ++a) row.push_back(r.at(b, a));
    rows.push_back(std::move(row));
  }
  return json{{"src", preorder_to_json(r.src())},
              {"dst", preorder_to_json(r.dst())},
              {"mat", std::move(rows)}};
}

inline MonotoneRelation relation_from_json(const json& j, const std::string& where = "relation",
                                           bool root = false) {
  detail::check_keys(j, {"src", "dst", "mat"}, where, root);
  FinPreorder src = preorder_from_json(j.at("src"), where + ".src");
  FinPreorder dst = preorder_from_json(j.at("dst"), where + ".dst");
  std::vector<std::vector<bool>> rows = j.at("mat").get<std::vector<std::vector<bool>>>();
  if (static_cast<int>(rows.size()) != dst.size())
    fail(Err::BadArtifact, where + ": mat must have one row per dst element");
  std::vector<bool> flat;
  flat.reserve(static_cast<size_t>(src.size()) * dst.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != src.size())
      fail(Err::BadArtifact, where + ": mat row length must match src size");
    for (bool v : row) flat.push_back(v);
  }
  return MonotoneRelation::checked(std::move(src), std::move(dst), std::move(flat));
}

inline json span_to_json(const Span& s) {
  return json{{"vertex", preorder_to_json(s.vertex)},
              {"d0", map_to_json(s.d0)},
              {"d1", map_to_json(s.d1)}};
}

inline Span span_from_json(const json& j, const std::string& where = "span", bool root = false) {
  detail::check_keys(j, {"vertex", "d0", "d1"}, where, root);
  Span s{preorder_from_json(j.at("vertex"), where + ".vertex"),
         map_from_json(j.at("d0"), where + ".d0"), map_from_json(j.at("d1"), where + ".d1")};
  if (s.d0.dom() != s.vertex || s.d1.dom() != s.vertex)
    fail(Err::BadArtifact, where + ": legs must start at the vertex");
  return s;
}

inline json square_to_json(const LaxSquare& sq) {
  return json{{"p0", map_to_json(sq.p0)},
              {"p1", map_to_json(sq.p1)},
              {"f", map_to_json(sq.f)},
              {"g", map_to_json(sq.g)}};
}

inline LaxSquare square_from_json(const json& j, const std::string& where = "square",
                                  bool root = false) {
  detail::check_keys(j, {"p0", "p1", "f", "g"}, where, root);
  LaxSquare sq{map_from_json(j.at("p0"), where + ".p0"), map_from_json(j.at("p1"), where + ".p1"),
               map_from_json(j.at("f"), where + ".f"), map_from_json(j.at("g"), where + ".g")};
  if (!square_shape_ok(sq)) fail(Err::BadArtifact, where + ": maps do not fit a square");
  return sq;
}

inline Registry registry_from_json(const json& j) {
  if (!j.is_object()) fail(Err::BadArtifact, "registry: expected an object of named preorders");
  Registry out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out.emplace(it.key(), preorder_from_json(it.value(), "registry." + it.key()));
  return out;
}

inline json coalgebra_to_json(const Coalgebra& c) {
  json xi = json::object();
  for (int a = 0; a < c.carrier.size(); ++a)
    xi[c.carrier.elem(a)] = c.xi.cod().elem(c.xi.apply(a));
  return json{{"carrier", preorder_to_json(c.carrier)},
              {"functor", c.functor.str()},
              {"xi", std::move(xi)}};
}

inline Coalgebra coalgebra_from_json(const json& j, const Registry& registry = {},
                                     const SizeCaps& caps = {},
                                     const std::string& where = "coalgebra", bool root = false) {
  detail::check_keys(j, {"carrier", "functor", "xi"}, where, root);
  FinPreorder carrier = preorder_from_json(j.at("carrier"), where + ".carrier");
  FunctorExpr functor = parse_functor(j.at("functor").get<std::string>(), registry);
  std::vector<std::pair<std::string, std::string>> literals;
  for (auto it = j.at("xi").begin(); it != j.at("xi").end(); ++it)
    literals.emplace_back(it.key(), it.value().get<std::string>());
  return mk_coalgebra(std::move(carrier), std::move(functor), literals, caps);
}

inline json formula_to_json(const Formula& f) {
  switch (f.tag()) {
    case Formula::Tag::Top: return json("top");
    case Formula::Tag::Bot: return json("bot");
    case Formula::Tag::And:
      return json{{"and", json::array({formula_to_json(f.kid(0)), formula_to_json(f.kid(1))})}};
    case Formula::Tag::Or:
      return json{{"or", json::array({formula_to_json(f.kid(0)), formula_to_json(f.kid(1))})}};
    case Formula::Tag::Nabla: {
      json subs = json::object();
      for (const auto& [label, sub] : f.subs()) subs[label] = formula_to_json(sub);
      return json{{"nabla", json{{"payload", f.payload()}, {"subs", std::move(subs)}}}};
    }
  }
  fail(Err::BadArtifact, "unknown formula tag");
}

inline Formula formula_from_json(const json& j, const std::string& where = "formula") {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "top") return Formula::top();
    if (s == "bot") return Formula::bot();
    fail(Err::BadArtifact, where + ": unknown atom '" + s + "'");
  }
  if (!j.is_object() || j.size() != 1)
    fail(Err::BadArtifact, where + ": expected \"top\", \"bot\" or a one-key object");
  const std::string key = j.begin().key();
  const json& body = j.begin().value();
  if (key == "and" || key == "or") {
    if (!body.is_array() || body.size() != 2)
      fail(Err::BadArtifact, where + "." + key + ": expected exactly two operands");
    Formula l = formula_from_json(body[0], where + "." + key + "[0]");
    Formula r = formula_from_json(body[1], where + "." + key + "[1]");
    return key == "and" ? Formula::conj(std::move(l), std::move(r))
                        : Formula::disj(std::move(l), std::move(r));
  }
  if (key == "nabla") {
    detail::check_keys(body, {"payload", "subs"}, where + ".nabla");
    std::vector<std::pair<std::string, Formula>> subs;
    for (auto it = body.at("subs").begin(); it != body.at("subs").end(); ++it)
      subs.emplace_back(it.key(), formula_from_json(it.value(), where + ".nabla.subs." + it.key()));
    return Formula::nabla(body.at("payload").get<std::string>(), std::move(subs));
  }
  fail(Err::BadArtifact, where + ": unknown connective '" + key + "'");
}

inline json bcc_report_to_json(const BccReport& r) {
  json counters = json::object();
  for (const auto& [family, count] : r.pass_counts) counters[family] = count;
  counters["skipped_by_caps"] = r.skipped_by_caps;
  json out{{"schema", kSchemaTag},
           {"command", "bcc-check"},
           {"functor", r.functor},
           {"seed", r.seed},
           {"max_size", r.max_size},
           {"status", r.counterexample ? "fail" : "pass"},
           {"summary", r.summary},
           {"counters", std::move(counters)}};
  if (r.counterexample) {
    json ce{{"family", r.counterexample->family}, {"detail", r.counterexample->detail}};
    if (r.counterexample->image_square) ce["square"] = square_to_json(*r.counterexample->image_square);
    if (!r.counterexample->witness_a.empty() || !r.counterexample->witness_b.empty())
      ce["witness"] = json::array({r.counterexample->witness_a, r.counterexample->witness_b});
    out["counterexample"] = std::move(ce);
  }
  return out;
}

/// Root-level artifact wrapper: attaches the schema tag.
inline json tag_root(json j) {
  j["schema"] = kSchemaTag;
  return j;
}

enum class ArtifactKind { Preorder, Map, Relation, SpanKind, Square, CoalgebraKind, FormulaKind };

inline const char* artifact_kind_name(ArtifactKind k) {
  switch (k) {
    case ArtifactKind::Preorder: return "preorder";
    case ArtifactKind::Map: return "map";
    case ArtifactKind::Relation: return "relation";
    case ArtifactKind::SpanKind: return "span";
    case ArtifactKind::Square: return "square";
    case ArtifactKind::CoalgebraKind: return "coalgebra";
    case ArtifactKind::FormulaKind: return "formula";
  }
  return "unknown";
}

/// Detects what a root JSON value encodes, by its key set.
inline ArtifactKind detect_artifact(const json& j) {
  if (j.is_string()) return ArtifactKind::FormulaKind;
  if (!j.is_object()) fail(Err::BadArtifact, "artifact root must be an object or a formula atom");
  auto has = [&](const char* k) { return j.contains(k); };
  if (has("elems") && has("leq")) return ArtifactKind::Preorder;
  if (has("dom") && has("cod") && has("table")) return ArtifactKind::Map;
  if (has("src") && has("dst") && has("mat")) return ArtifactKind::Relation;
  if (has("vertex") && has("d0") && has("d1")) return ArtifactKind::SpanKind;
  if (has("p0") && has("p1") && has("f") && has("g")) return ArtifactKind::Square;
  if (has("carrier") && has("functor") && has("xi")) return ArtifactKind::CoalgebraKind;
  if (j.size() == 1 &&
      (has("and") || has("or") || has("nabla")))
    return ArtifactKind::FormulaKind;
  fail(Err::BadArtifact, "unrecognized artifact shape");
}

}  // namespace relift
