// Command-line front end: loads JSON artifacts, runs checks, and emits
// reports. Exit codes: 0 pass, 1 fail (a counterexample exists), 2
// usage or input errors.
//
// Reports are JSON on stdout with sorted keys and no timing fields, so
// identical inputs plus --seed give byte-identical output. --pretty
// switches to a human summary that does include wall time.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relift/relift.hpp"

namespace {

using relift::json;

struct Options {
  uint64_t seed = 0;
  int max_size = 3;
  int cap = 0;  // 0 = defaults
  bool pretty = false;
  std::string registry_path;
};

relift::SizeCaps caps_from(const Options& opt) {
  relift::SizeCaps caps;
  if (opt.cap > 0) {
    caps.set_layer_arg = opt.cap;
    caps.lowerset = opt.cap;
  }
  return caps;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) relift::fail(relift::Err::BadArtifact, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_input(path));
  } catch (const json::parse_error& e) {
    relift::fail(relift::Err::BadArtifact, path + ": " + e.what());
  }
}

relift::Registry load_registry(const Options& opt) {
  if (opt.registry_path.empty()) return {};
  return relift::registry_from_json(load_json(opt.registry_path));
}

int emit(const Options& opt, json report, double wall_ms) {
  const std::string status = report.value("status", "pass");
  if (opt.pretty) {
    std::cout << report["command"].get<std::string>() << ": " << status;
    if (report.contains("summary")) std::cout << " (" << report["summary"].get<std::string>() << ")";
    std::cout << " [" << wall_ms << " ms]\n";
    if (report.contains("counterexample"))
      std::cout << "counterexample: " << report["counterexample"].dump(2) << "\n";
    if (report.contains("result")) std::cout << report["result"].dump(2) << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
  return status == "pass" ? 0 : 1;
}

json validate_artifact(const json& j, const Options& opt) {
  relift::ArtifactKind kind = relift::detect_artifact(j);
  json counters = json::object();
  switch (kind) {
    case relift::ArtifactKind::Preorder: {
      relift::FinPreorder p = relift::preorder_from_json(j, "preorder", true);
      counters["elems"] = p.size();
      counters["poset"] = p.is_poset();
      break;
    }
    case relift::ArtifactKind::Map: {
      relift::MonotoneMap f = relift::map_from_json(j, "map", true);
      counters["dom"] = f.dom().size();
      counters["cod"] = f.cod().size();
      counters["embedding"] = relift::is_order_embedding(f);
      counters["absolutely_dense"] = relift::is_absolutely_dense(f);
      counters["surjective"] = relift::is_surjective_on_objects(f);
      break;
    }
    case relift::ArtifactKind::Relation: {
      relift::MonotoneRelation r = relift::relation_from_json(j, "relation", true);
      counters["entries"] = r.count();
      break;
    }
    case relift::ArtifactKind::SpanKind: {
      relift::Span s = relift::span_from_json(j, "span", true);
      counters["vertex"] = s.vertex.size();
      counters["fibration"] = relift::is_fibration(s);
      break;
    }
    case relift::ArtifactKind::Square: {
      relift::LaxSquare sq = relift::square_from_json(j, "square", true);
      relift::require_lax(sq);
      counters["lax"] = true;
      break;
    }
    case relift::ArtifactKind::CoalgebraKind: {
      relift::Coalgebra c =
          relift::coalgebra_from_json(j, load_registry(opt), caps_from(opt), "coalgebra", true);
      counters["carrier"] = c.carrier.size();
      counters["functor"] = c.functor.str();
      break;
    }
    case relift::ArtifactKind::FormulaKind: {
      relift::formula_from_json(j);
      counters["formula"] = true;
      break;
    }
  }
  return json{{"schema", relift::kSchemaTag},
              {"command", "validate"},
              {"kind", relift::artifact_kind_name(kind)},
              {"status", "pass"},
              {"counters", std::move(counters)}};
}

int run(int argc, char** argv) {
  CLI::App app{"workbench for monotone relations on finite preorders"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--seed", opt.seed, "PRNG seed for generated suites");
  app.add_option("--max-size", opt.max_size, "carrier size bound for generated fixtures");
  app.add_option("--cap", opt.cap, "carrier cap for set-layer constructions");
  app.add_option("--registry", opt.registry_path, "JSON file of named preorders for const()");
  bool json_mode = false;
  app.add_flag("--json", json_mode, "machine-readable report (default)");
  app.add_flag("--pretty", opt.pretty, "human-readable report with timing");

  std::string file_a, file_b, functor_src;

  CLI::App* validate = app.add_subcommand("validate", "check invariants of a JSON artifact");
  validate->add_option("file", file_a, "artifact file or -")->required();

  CLI::App* compose = app.add_subcommand("compose", "compose two relations (second after first)");
  compose->add_option("first", file_a, "relation R: A -|-> B")->required();
  compose->add_option("second", file_b, "relation S: B -|-> C")->required();

  CLI::App* lift = app.add_subcommand("lift", "apply a functor lifting to a relation");
  lift->add_option("--functor", functor_src, "functor expression")->required();
  lift->add_option("file", file_a, "relation file or -")->required();

  CLI::App* exact = app.add_subcommand("exact-check", "exactness of a lax square");
  exact->add_option("file", file_a, "square file or -")->required();

  CLI::App* bcc = app.add_subcommand("bcc-check", "search for exactness counterexamples");
  bcc->add_option("--functor", functor_src, "functor expression")->required();

  CLI::App* simulate = app.add_subcommand("simulate", "greatest simulation between coalgebras");
  simulate->add_option("first", file_a, "coalgebra whose states are simulated")->required();
  simulate->add_option("second", file_b, "coalgebra whose states simulate")->required();

  CLI::App* modelcheck = app.add_subcommand("modelcheck", "satisfaction set of a formula");
  modelcheck->add_option("coalgebra", file_a, "coalgebra file")->required();
  modelcheck->add_option("formula", file_b, "formula file or -")->required();

  CLI::App* catalog = app.add_subcommand("catalog", "emit exact squares derived from given maps");
  catalog->add_option("file", file_a, "JSON object with maps f, g, u, j, h, l")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto started = std::chrono::steady_clock::now();
  auto wall = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
        .count();
  };

  try {
    if (*validate) return emit(opt, validate_artifact(load_json(file_a), opt), wall());

    if (*compose) {
      relift::MonotoneRelation r = relift::relation_from_json(load_json(file_a), "first", true);
      relift::MonotoneRelation s = relift::relation_from_json(load_json(file_b), "second", true);
      relift::MonotoneRelation out = relift::compose_rel(s, r);
      return emit(opt,
                  json{{"schema", relift::kSchemaTag},
                       {"command", "compose"},
                       {"status", "pass"},
                       {"counters", json{{"entries", out.count()}}},
                       {"result", relift::relation_to_json(out)}},
                  wall());
    }

    if (*lift) {
      relift::FunctorExpr t = relift::parse_functor(functor_src, load_registry(opt));
      relift::MonotoneRelation r = relift::relation_from_json(load_json(file_a), "relation", true);
      relift::MonotoneRelation out = relift::lift_relation(t, r, caps_from(opt));
      return emit(opt,
                  json{{"schema", relift::kSchemaTag},
                       {"command", "lift"},
                       {"functor", t.str()},
                       {"status", "pass"},
                       {"counters",
                        json{{"src", out.src().size()}, {"dst", out.dst().size()},
                             {"entries", out.count()}}},
                       {"result", relift::relation_to_json(out)}},
                  wall());
    }

    if (*exact) {
      relift::LaxSquare sq = relift::square_from_json(load_json(file_a), "square", true);
      relift::require_lax(sq);
      auto witness = relift::exactness_counterexample(sq);
      json report{{"schema", relift::kSchemaTag},
                  {"command", "exact-check"},
                  {"status", witness ? "fail" : "pass"},
                  {"counters", json{{"vertex", sq.p0.dom().size()}}}};
      if (witness)
        report["counterexample"] =
            json{{"witness", json::array({witness->first, witness->second})}};
      return emit(opt, report, wall());
    }

    if (*bcc) {
      relift::BccConfig cfg;
      cfg.seed = opt.seed;
      cfg.max_size = opt.max_size;
      cfg.caps = caps_from(opt);
      relift::FunctorExpr t = relift::parse_functor(functor_src, load_registry(opt));
      relift::BccReport report = relift::check_bcc(t, cfg);
      return emit(opt, relift::bcc_report_to_json(report), wall());
    }

    if (*simulate) {
      relift::Registry reg = load_registry(opt);
      relift::SizeCaps caps = caps_from(opt);
      relift::Coalgebra c1 =
          relift::coalgebra_from_json(load_json(file_a), reg, caps, "first", true);
      relift::Coalgebra c2 =
          relift::coalgebra_from_json(load_json(file_b), reg, caps, "second", true);
      relift::MonotoneRelation out = relift::simulation_gfp(c1, c2, caps);
      return emit(opt,
                  json{{"schema", relift::kSchemaTag},
                       {"command", "simulate"},
                       {"status", "pass"},
                       {"counters", json{{"entries", out.count()}}},
                       {"result", relift::relation_to_json(out)}},
                  wall());
    }

    if (*modelcheck) {
      relift::Registry reg = load_registry(opt);
      relift::SizeCaps caps = caps_from(opt);
      relift::Coalgebra c =
          relift::coalgebra_from_json(load_json(file_a), reg, caps, "coalgebra", true);
      relift::Formula phi = relift::formula_from_json(load_json(file_b));
      std::vector<bool> sat = relift::model_check(c, phi, caps);
      return emit(opt,
                  json{{"schema", relift::kSchemaTag},
                       {"command", "modelcheck"},
                       {"status", "pass"},
                       {"counters", json{{"carrier", c.carrier.size()}}},
                       {"result", json{{"sat", relift::sat_elems(c, sat)}}}},
                  wall());
    }

    if (*catalog) {
      json maps_json = load_json(file_a);
      if (!maps_json.is_object())
        relift::fail(relift::Err::BadArtifact, "catalog input must be an object of maps");
      std::map<std::string, relift::MonotoneMap> maps;
      for (auto it = maps_json.begin(); it != maps_json.end(); ++it) {
        if (it.key() == "schema") continue;
        maps.emplace(it.key(), relift::map_from_json(it.value(), it.key()));
      }
      auto have = [&](const char* k) { return maps.count(k) > 0; };
      json squares = json::array();
      auto push = [&](relift::SquareKind kind, const relift::LaxSquare& sq) {
        if (relift::is_lax(sq) && relift::is_exact_square(sq))
          squares.push_back(json{{"kind", relift::square_kind_name(kind)},
                                 {"square", relift::square_to_json(sq)}});
      };
      using SK = relift::SquareKind;
      if (have("f")) {
        const relift::MonotoneMap& f = maps.at("f");
        push(SK::YonedaLeft, relift::catalog_square(SK::YonedaLeft, {f}));
        push(SK::YonedaRight, relift::catalog_square(SK::YonedaRight, {f}));
        if (relift::is_order_embedding(f)) push(SK::Embedding, relift::catalog_square(SK::Embedding, {f}));
        if (relift::is_absolutely_dense(f)) push(SK::AbsDense, relift::catalog_square(SK::AbsDense, {f}));
        if (have("g")) {
          const relift::MonotoneMap& g = maps.at("g");
          if (f.cod() == g.cod()) push(SK::Comma, relift::catalog_square(SK::Comma, {f, g}));
          if (f.dom() == g.dom()) push(SK::OpComma, relift::catalog_square(SK::OpComma, {f, g}));
        }
        std::optional<relift::MonotoneMap> u =
            have("u") ? std::optional<relift::MonotoneMap>(maps.at("u"))
                      : relift::find_right_adjoint(f);
        if (u && u->dom() == f.cod() && u->cod() == f.dom()) {
          push(SK::AdjunctionUnit, relift::catalog_square(SK::AdjunctionUnit, {f, *u}));
          push(SK::AdjunctionCounit, relift::catalog_square(SK::AdjunctionCounit, {f, *u}));
        }
        if (u && have("j")) {
          const relift::MonotoneMap& jm = maps.at("j");
          if (jm.dom() == f.dom() && u->dom() == f.cod() && u->cod() == jm.cod())
            push(SK::RelativeAdjoint, relift::catalog_square(SK::RelativeAdjoint, {f, *u, jm}));
        }
      }
      if (have("h") && have("j") && have("l")) {
        const relift::MonotoneMap& h = maps.at("h");
        const relift::MonotoneMap& jm = maps.at("j");
        const relift::MonotoneMap& l = maps.at("l");
        if (jm.dom() == h.dom() && l.dom() == jm.cod() && l.cod() == h.cod())
          push(SK::AbsoluteKan, relift::catalog_square(SK::AbsoluteKan, {h, jm, l}));
      }
      return emit(opt,
                  json{{"schema", relift::kSchemaTag},
                       {"command", "catalog"},
                       {"status", "pass"},
                       {"counters", json{{"squares", squares.size()}}},
                       {"squares", std::move(squares)}},
                  wall());
    }
  } catch (const relift::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
