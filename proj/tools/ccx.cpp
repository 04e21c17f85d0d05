#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ccx/fuzz.hpp"

namespace {

using ccx::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ccx::Error(ccx::Errc::ParseError, "cannot open file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ccx::Error(ccx::Errc::ParseError, path + ": " + e.what());
  }
  return doc;
}

// Vertex arguments are JSON ([0,0], nested pairs) or bare finite names.
json vertex_arg(const std::string& arg) {
  try {
    return json::parse(arg);
  } catch (const json::parse_error&) {
    return json(arg);
  }
}

ccx::Word word_arg(const std::string& arg) {
  ccx::Word word;
  try {
    json j = json::parse(arg);
    if (j.is_array()) {
      for (const auto& item : j) word.push_back(item.get<std::string>());
      return word;
    }
  } catch (const json::parse_error&) {
  }
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) word.push_back(item);
  }
  return word;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

int exit_code_for(const ccx::Error& e) {
  switch (e.code()) {
    case ccx::Errc::BudgetExceeded:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ccx: exact combinatorics for finite-dimensional CAT(0) cube complexes\n"
               "(median-graph 1-skeleta): hyperplanes, disjoint wall triples, group\n"
               "actions, and fixed-point-or-hyperbolic-witness resolution"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  int budget_power = 8;
  int budget_radius = 12;
  std::size_t orbit_cap = 20000;
  bool unchecked = false;
  bool json_always = false;
  app.add_option("--seed", seed, "random seed for generated corpora")->capture_default_str();
  app.add_option("--budget-power,--power", budget_power, "max power in the hyperbolic search")
      ->capture_default_str();
  app.add_option("--budget-radius,--radius", budget_radius, "max ball radius in the elliptic search")
      ->capture_default_str();
  app.add_option("--orbit-cap", orbit_cap, "vertex cap for orbit and word searches")
      ->capture_default_str();
  app.add_flag("--unchecked", unchecked, "skip the median-graph check when loading finite input");
  app.add_flag("--json", json_always, "emit JSON even for scalar answers");

  auto budget = [&]() {
    ccx::ClassifyBudget b;
    b.power = budget_power;
    b.radius = budget_radius;
    b.orbit_cap = orbit_cap;
    return b;
  };

  std::string complex_path, action_path, arg1, arg2, arg3;

  auto* cmd_verify = app.add_subcommand("verify", "median-graph verification of a complex file");
  cmd_verify->add_option("complex", complex_path)->required();

  auto* cmd_info = app.add_subcommand("info", "backend, dimension and counts");
  cmd_info->add_option("complex", complex_path)->required();

  auto* cmd_distance = app.add_subcommand("distance", "1-skeleton distance between two vertices");
  cmd_distance->add_option("complex", complex_path)->required();
  cmd_distance->add_option("x", arg1)->required();
  cmd_distance->add_option("y", arg2)->required();

  auto* cmd_median = app.add_subcommand("median", "median of a vertex triple");
  cmd_median->add_option("complex", complex_path)->required();
  cmd_median->add_option("x", arg1)->required();
  cmd_median->add_option("y", arg2)->required();
  cmd_median->add_option("z", arg3)->required();

  auto* cmd_hyperplanes =
      app.add_subcommand("hyperplanes", "hyperplanes crossed between two vertices");
  cmd_hyperplanes->add_option("complex", complex_path)->required();
  cmd_hyperplanes->add_option("x", arg1)->required();
  cmd_hyperplanes->add_option("y", arg2)->required();

  auto* cmd_prop1 =
      app.add_subcommand("prop1", "disjoint wall triple from a hyperplane set file");
  cmd_prop1->add_option("complex", complex_path)->required();
  cmd_prop1->add_option("walls", arg1, "JSON file with an array of hyperplanes")->required();

  auto* cmd_classify = app.add_subcommand("classify", "elliptic/hyperbolic certificate for a word");
  cmd_classify->add_option("complex", complex_path)->required();
  cmd_classify->add_option("action", action_path)->required();
  cmd_classify->add_option("word", arg1, "JSON array or comma-separated generator names")
      ->required();

  auto* cmd_fixed = app.add_subcommand("fixed-point", "global fixed cube or hyperbolic witness");
  cmd_fixed->add_option("complex", complex_path)->required();
  cmd_fixed->add_option("action", action_path)->required();

  auto* cmd_fixset = app.add_subcommand("fix-set", "fixed vertices and invariant cubes");
  cmd_fixset->add_option("complex", complex_path)->required();
  cmd_fixset->add_option("action", action_path)->required();

  auto* cmd_orbit = app.add_subcommand("orbit", "orbit of a vertex under the action");
  cmd_orbit->add_option("complex", complex_path)->required();
  cmd_orbit->add_option("action", action_path)->required();
  std::string orbit_vertex;
  cmd_orbit->add_option("--vertex", orbit_vertex, "start vertex (default: the action base)");

  auto* cmd_fuzz = app.add_subcommand("fuzz", "seeded invariant suites over generated corpora");
  std::size_t fuzz_cases = 100;
  std::string fuzz_suites = "helly,prop1,theorem_a,theta_oracle,distance_count";
  cmd_fuzz->add_option("--cases", fuzz_cases)->capture_default_str();
  cmd_fuzz->add_option("--suites", fuzz_suites, "comma-separated subset of: helly, prop1, theorem_a, theta_oracle, distance_count")
      ->capture_default_str();

  auto* cmd_dot = app.add_subcommand("export-dot", "DOT text with optional overlays");
  cmd_dot->add_option("complex", complex_path)->required();
  bool dot_hyperplanes = false;
  bool dot_fixed_cube = false;
  std::string dot_orbit_vertex;
  cmd_dot->add_flag("--hyperplanes", dot_hyperplanes, "color edges by Θ-class");
  cmd_dot->add_option("--action", action_path, "action file for the orbit/fixed-cube overlays");
  cmd_dot->add_option("--orbit-vertex", dot_orbit_vertex, "overlay the orbit of this vertex");
  cmd_dot->add_flag("--fixed-cube", dot_fixed_cube, "overlay the fixed cube when one exists");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_verify->parsed()) {
      ccx::CubeComplex x = ccx::parse_complex(load_json_file(complex_path), /*unchecked=*/true);
      if (x.kind() != ccx::CubeComplex::Kind::Finite) {
        emit(json{{"ok", true}, {"note", "structural backend; nothing to verify"}});
        return 0;
      }
      ccx::MedianCheck check = x.verify_median_graph();
      if (check.ok()) {
        emit(json{{"ok", true}});
        return 0;
      }
      json triple = json::array();
      for (const auto& v : *check.violation) triple.push_back(ccx::vertex_to_json(x, v));
      emit(json{{"ok", false}, {"violation", triple}, {"median_count", check.median_count}});
      return 1;
    }

    if (cmd_info->parsed()) {
      ccx::CubeComplex x = ccx::parse_complex(load_json_file(complex_path), unchecked);
      json out{{"dimension", x.dimension()},
               {"base", ccx::vertex_to_json(x, x.base_vertex())}};
      switch (x.kind()) {
        case ccx::CubeComplex::Kind::Finite:
          out["type"] = "finite";
          out["vertices"] = x.vertex_count();
          out["edges"] = x.edges().size();
          out["hyperplanes"] = ccx::all_hyperplanes(x).size();
          out["cubes"] = x.cubes().size();
          break;
        case ccx::CubeComplex::Kind::Lattice:
          out["type"] = "lattice";
          out["rank"] = x.rank();
          break;
        case ccx::CubeComplex::Kind::Product:
          out["type"] = "product";
          break;
      }
      emit(out);
      return 0;
    }

    if (cmd_distance->parsed()) {
      ccx::CubeComplex x = ccx::parse_complex(load_json_file(complex_path), unchecked);
      std::int64_t d = x.distance(ccx::parse_vertex(vertex_arg(arg1), x, "$.x"),
                                  ccx::parse_vertex(vertex_arg(arg2), x, "$.y"));
      if (json_always) {
        emit(json{{"distance", d}});
      } else {
        std::cout << d << "\n";
      }
      return 0;
    }

    if (cmd_median->parsed()) {
      ccx::CubeComplex x = ccx::parse_complex(load_json_file(complex_path), unchecked);
      ccx::VertexId m = x.median(ccx::parse_vertex(vertex_arg(arg1), x, "$.x"),
                                 ccx::parse_vertex(vertex_arg(arg2), x, "$.y"),
                                 ccx::parse_vertex(vertex_arg(arg3), x, "$.z"));
      emit(json{{"median", ccx::vertex_to_json(x, m)}});
      return 0;
    }

    if (cmd_hyperplanes->parsed()) {
      ccx::CubeComplex x = ccx::parse_complex(load_json_file(complex_path), unchecked);
      json out = json::array();
      for (const ccx::Hyperplane& h :
           ccx::hyperplanes_between(x, ccx::parse_vertex(vertex_arg(arg1), x, "$.x"),
                                    ccx::parse_vertex(vertex_arg(arg2), x, "$.y"))) {
        out.push_back(ccx::hyperplane_to_json(x, h));
      }
      emit(json{{"hyperplanes", out}});
      return 0;
    }

    if (cmd_prop1->parsed()) {
      ccx::CubeComplex x = ccx::parse_complex(load_json_file(complex_path), unchecked);
      json jwalls = load_json_file(arg1);
      if (!jwalls.is_array()) throw ccx::Error(ccx::Errc::ParseError, "wall file: expected an array");
      std::vector<ccx::Hyperplane> walls;
      for (std::size_t i = 0; i < jwalls.size(); ++i) {
        walls.push_back(ccx::parse_hyperplane(jwalls[i], x, "$[" + std::to_string(i) + "]"));
      }
      auto triple = ccx::find_disjoint_triple(x, walls);
      if (!triple) {
        emit(json{{"found", false},
                  {"threshold", ccx::disjoint_triple_threshold(x.dimension())},
                  {"size", walls.size()}});
        return 1;
      }
      json jt = json::array();
      for (const auto& h : triple->hyperplanes) jt.push_back(ccx::hyperplane_to_json(x, h));
      json out{{"found", true}, {"triple", jt}};
      if (triple->separator) out["separator"] = *triple->separator;
      emit(out);
      return 0;
    }

    if (cmd_classify->parsed()) {
      ccx::CubeComplex x = ccx::parse_complex(load_json_file(complex_path), unchecked);
      ccx::GroupAction action = ccx::parse_action(load_json_file(action_path), x);
      ccx::Word word = word_arg(arg1);
      ccx::ClassifyResult res = ccx::classify(x, ccx::evaluate(action, word), action.base(), budget());
      emit(ccx::certificate_to_json(x, res));
      if (std::holds_alternative<ccx::EllipticCert>(res)) return 0;
      if (std::holds_alternative<ccx::HyperbolicCert>(res)) return 1;
      return 3;
    }

    if (cmd_fixed->parsed()) {
      ccx::CubeComplex x = ccx::parse_complex(load_json_file(complex_path), unchecked);
      ccx::GroupAction action = ccx::parse_action(load_json_file(action_path), x);
      ccx::ResolutionOutcome outcome = ccx::fixed_point_or_witness(x, action, budget());
      emit(ccx::outcome_to_json(x, outcome));
      if (std::holds_alternative<ccx::FixedPoint>(outcome)) return 0;
      if (std::holds_alternative<ccx::HyperbolicWitness>(outcome)) return 1;
      return 3;
    }

    if (cmd_fixset->parsed()) {
      ccx::CubeComplex x = ccx::parse_complex(load_json_file(complex_path), unchecked);
      ccx::GroupAction action = ccx::parse_action(load_json_file(action_path), x);
      std::vector<ccx::Automorphism> autos;
      for (std::size_t i = 0; i < action.user_generator_count(); ++i) {
        autos.push_back(action.generators()[i].aut);
      }
      ccx::FixSet fs = ccx::fix_set(x, autos);
      json jverts = json::array();
      for (const auto& v : fs.vertices) jverts.push_back(ccx::vertex_to_json(x, v));
      json jcubes = json::array();
      for (const auto& c : fs.cubes) jcubes.push_back(ccx::cube_to_json(x, c));
      emit(json{{"vertices", jverts}, {"cubes", jcubes}});
      return 0;
    }

    if (cmd_orbit->parsed()) {
      ccx::CubeComplex x = ccx::parse_complex(load_json_file(complex_path), unchecked);
      ccx::GroupAction action = ccx::parse_action(load_json_file(action_path), x);
      ccx::VertexId v = orbit_vertex.empty()
                            ? action.base()
                            : ccx::parse_vertex(vertex_arg(orbit_vertex), x, "$.vertex");
      ccx::OrbitResult res = ccx::orbit(x, action, v, orbit_cap);
      json jverts = json::array();
      for (const auto& w : res.vertices) jverts.push_back(ccx::vertex_to_json(x, w));
      if (!res.capped) {
        emit(json{{"capped", false}, {"vertices", jverts}});
        return 0;
      }
      emit(json{{"capped", true},
                {"visited", res.vertices.size()},
                {"farthest", ccx::vertex_to_json(x, *res.farthest)},
                {"word", res.farthest_word}});
      return 3;
    }

    if (cmd_fuzz->parsed()) {
      std::vector<std::string> suites;
      std::stringstream ss(fuzz_suites);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) suites.push_back(item);
      }
      json report = ccx::run_fuzz(fuzz_cases, seed, suites);
      emit(report);
      return report.at("ok").get<bool>() ? 0 : 1;
    }

    if (cmd_dot->parsed()) {
      ccx::CubeComplex x = ccx::parse_complex(load_json_file(complex_path), unchecked);
      ccx::DotOverlays overlays;
      overlays.hyperplanes = dot_hyperplanes;
      if (!action_path.empty()) {
        ccx::GroupAction action = ccx::parse_action(load_json_file(action_path), x);
        if (!dot_orbit_vertex.empty()) {
          ccx::OrbitResult res =
              ccx::orbit(x, action, ccx::parse_vertex(vertex_arg(dot_orbit_vertex), x, "$.vertex"),
                         orbit_cap);
          overlays.orbit = res.vertices;
        }
        if (dot_fixed_cube) {
          ccx::ResolutionOutcome outcome = ccx::fixed_point_or_witness(x, action, budget());
          if (const auto* fp = std::get_if<ccx::FixedPoint>(&outcome)) {
            overlays.highlight_cube = fp->cube;
          }
        }
      }
      std::cout << ccx::export_dot(x, overlays);
      return 0;
    }
  } catch (const ccx::Error& e) {
    std::cerr << "error (" << ccx::errc_name(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
