#include "ccx/io.hpp"

#include <algorithm>
#include <set>

namespace ccx {

namespace {

[[noreturn]] void parse_fail(const std::string& path, const std::string& msg) {
  throw Error(Errc::ParseError, "at " + path + ": " + msg);
}

void expect_keys(const json& j, const std::string& path, const std::set<std::string>& required,
                 const std::set<std::string>& optional) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!required.count(key) && !optional.count(key)) parse_fail(path, "unknown key '" + key + "'");
  }
  for (const std::string& key : required) {
    if (!j.contains(key)) parse_fail(path, "missing key '" + key + "'");
  }
}

std::string expect_string(const json& j, const std::string& path) {
  if (!j.is_string()) parse_fail(path, "expected a string");
  return j.get<std::string>();
}

std::int64_t expect_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) parse_fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

CubeComplex parse_complex_at(const json& doc, const std::string& path, bool unchecked) {
  if (!doc.is_object()) parse_fail(path, "expected an object");
  if (!doc.contains("type")) parse_fail(path, "missing key 'type'");
  std::string type = expect_string(doc.at("type"), path + ".type");

  std::optional<CubeComplex> out;
  if (type == "finite") {
    expect_keys(doc, path, {"type", "vertices", "edges"}, {"name", "dimension"});
    const json& jverts = doc.at("vertices");
    if (!jverts.is_array() || jverts.empty()) parse_fail(path + ".vertices", "expected a non-empty array");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < jverts.size(); ++i) {
      names.push_back(expect_string(jverts[i], path + ".vertices[" + std::to_string(i) + "]"));
    }
    const json& jedges = doc.at("edges");
    if (!jedges.is_array()) parse_fail(path + ".edges", "expected an array");
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < jedges.size(); ++i) {
      const std::string epath = path + ".edges[" + std::to_string(i) + "]";
      const json& je = jedges[i];
      if (!je.is_array() || je.size() != 2) parse_fail(epath, "expected a 2-element array");
      edges.emplace_back(expect_string(je[0], epath + "[0]"), expect_string(je[1], epath + "[1]"));
    }
    try {
      out = CubeComplex::finite(std::move(names), std::move(edges), !unchecked);
    } catch (const Error& e) {
      if (e.code() == Errc::MedianViolation || e.code() == Errc::Disconnected ||
          e.code() == Errc::InvalidArguments) {
        parse_fail(path, e.what());
      }
      throw;
    }
  } else if (type == "lattice") {
    expect_keys(doc, path, {"type", "rank"}, {"name", "dimension"});
    std::int64_t rank = expect_int(doc.at("rank"), path + ".rank");
    if (rank < 1 || rank > 16) parse_fail(path + ".rank", "rank must be in 1..16");
    out = CubeComplex::lattice(static_cast<int>(rank));
  } else if (type == "product") {
    expect_keys(doc, path, {"type", "factors"}, {"name", "dimension"});
    const json& jf = doc.at("factors");
    if (!jf.is_array() || jf.size() != 2) parse_fail(path + ".factors", "expected a 2-element array");
    CubeComplex left = parse_complex_at(jf[0], path + ".factors[0]", unchecked);
    CubeComplex right = parse_complex_at(jf[1], path + ".factors[1]", unchecked);
    out = CubeComplex::product(std::move(left), std::move(right));
  } else {
    parse_fail(path + ".type", "unknown backend type '" + type + "'");
  }

  if (doc.contains("name")) expect_string(doc.at("name"), path + ".name");
  if (doc.contains("dimension")) {
    std::int64_t want = expect_int(doc.at("dimension"), path + ".dimension");
    if (want != out->dimension()) {
      parse_fail(path + ".dimension", "declared dimension " + std::to_string(want) +
                                          " does not match the computed dimension " +
                                          std::to_string(out->dimension()));
    }
  }
  return *out;
}

}  // namespace

CubeComplex parse_complex(const json& doc, bool unchecked) {
  return parse_complex_at(doc, "$", unchecked);
}

json serialize_complex(const CubeComplex& x) {
  json out;
  switch (x.kind()) {
    case CubeComplex::Kind::Finite: {
      out["type"] = "finite";
      json verts = json::array();
      for (const VertexId& v : x.vertices()) verts.push_back(x.vertex_name(v));
      out["vertices"] = std::move(verts);
      json edges = json::array();
      for (const OrientedEdge& e : x.edges()) {
        edges.push_back(json::array({x.vertex_name(e.tail), x.vertex_name(e.head)}));
      }
      out["edges"] = std::move(edges);
      break;
    }
    case CubeComplex::Kind::Lattice:
      out["type"] = "lattice";
      out["rank"] = x.rank();
      break;
    case CubeComplex::Kind::Product:
      out["type"] = "product";
      out["factors"] = json::array({serialize_complex(x.factor(0)), serialize_complex(x.factor(1))});
      break;
  }
  return out;
}

VertexId parse_vertex(const json& doc, const CubeComplex& x, const std::string& path) {
  switch (x.kind()) {
    case CubeComplex::Kind::Finite: {
      std::string name = expect_string(doc, path);
      auto v = x.vertex_by_name(name);
      if (!v) parse_fail(path, "unknown vertex '" + name + "'");
      return *v;
    }
    case CubeComplex::Kind::Lattice: {
      if (!doc.is_array() || doc.size() != static_cast<std::size_t>(x.rank())) {
        parse_fail(path, "expected an array of " + std::to_string(x.rank()) + " coordinates");
      }
      std::vector<std::int64_t> coords;
      for (std::size_t i = 0; i < doc.size(); ++i) {
        coords.push_back(expect_int(doc[i], path + "[" + std::to_string(i) + "]"));
      }
      return VertexId(std::move(coords));
    }
    case CubeComplex::Kind::Product: {
      if (!doc.is_array() || doc.size() != 2) parse_fail(path, "expected [left, right]");
      VertexId a = parse_vertex(doc[0], x.factor(0), path + "[0]");
      VertexId b = parse_vertex(doc[1], x.factor(1), path + "[1]");
      std::vector<std::int64_t> coords = a.coords();
      coords.insert(coords.end(), b.coords().begin(), b.coords().end());
      return VertexId(std::move(coords));
    }
  }
  parse_fail(path, "unknown backend");
}

json vertex_to_json(const CubeComplex& x, const VertexId& v) {
  switch (x.kind()) {
    case CubeComplex::Kind::Finite:
      return x.vertex_name(v);
    case CubeComplex::Kind::Lattice:
      return json(v.coords());
    case CubeComplex::Kind::Product: {
      std::size_t la = x.factor(0).arity();
      VertexId a({v.coords().begin(), v.coords().begin() + la});
      VertexId b({v.coords().begin() + la, v.coords().end()});
      return json::array({vertex_to_json(x.factor(0), a), vertex_to_json(x.factor(1), b)});
    }
  }
  throw Error(Errc::InternalError, "unknown backend");
}

Hyperplane parse_hyperplane(const json& doc, const CubeComplex& x, const std::string& path) {
  switch (x.kind()) {
    case CubeComplex::Kind::Finite: {
      if (!doc.is_array() || doc.size() != 2) parse_fail(path, "expected an edge [\"a\",\"b\"]");
      VertexId a = parse_vertex(doc[0], x, path + "[0]");
      VertexId b = parse_vertex(doc[1], x, path + "[1]");
      if (x.distance(a, b) != 1) parse_fail(path, "the two vertices are not adjacent");
      return hyperplane_of(x, OrientedEdge(a, b));
    }
    case CubeComplex::Kind::Lattice: {
      expect_keys(doc, path, {"axis", "wall"}, {});
      std::int64_t axis = expect_int(doc.at("axis"), path + ".axis");
      std::int64_t wall = expect_int(doc.at("wall"), path + ".wall");
      if (axis < 0 || axis >= x.rank()) parse_fail(path + ".axis", "axis out of range");
      std::vector<std::int64_t> t(x.rank(), 0), h(x.rank(), 0);
      t[axis] = wall;
      h[axis] = wall + 1;
      return Hyperplane(OrientedEdge(VertexId(std::move(t)), VertexId(std::move(h))));
    }
    case CubeComplex::Kind::Product: {
      expect_keys(doc, path, {"factor", "hyperplane"}, {});
      std::int64_t f = expect_int(doc.at("factor"), path + ".factor");
      if (f != 0 && f != 1) parse_fail(path + ".factor", "factor must be 0 or 1");
      Hyperplane inner =
          parse_hyperplane(doc.at("hyperplane"), x.factor(static_cast<int>(f)), path + ".hyperplane");
      const OrientedEdge& rep = inner.representative();
      VertexId ob = x.factor(1 - static_cast<int>(f)).base_vertex();
      auto join = [](const VertexId& l, const VertexId& r) {
        std::vector<std::int64_t> c = l.coords();
        c.insert(c.end(), r.coords().begin(), r.coords().end());
        return VertexId(std::move(c));
      };
      if (f == 0) return Hyperplane(OrientedEdge(join(rep.tail, ob), join(rep.head, ob)));
      return Hyperplane(OrientedEdge(join(ob, rep.tail), join(ob, rep.head)));
    }
  }
  parse_fail(path, "unknown backend");
}

json hyperplane_to_json(const CubeComplex& x, const Hyperplane& h) {
  const OrientedEdge& rep = h.representative();
  switch (x.kind()) {
    case CubeComplex::Kind::Finite:
      return json::array({x.vertex_name(rep.tail), x.vertex_name(rep.head)});
    case CubeComplex::Kind::Lattice: {
      for (std::size_t i = 0; i < rep.tail.arity(); ++i) {
        if (rep.tail.coords()[i] != rep.head.coords()[i]) {
          return json{{"axis", i}, {"wall", rep.tail.coords()[i]}};
        }
      }
      throw Error(Errc::InternalError, "degenerate hyperplane representative");
    }
    case CubeComplex::Kind::Product: {
      std::size_t la = x.factor(0).arity();
      bool left = false;
      for (std::size_t i = 0; i < la; ++i) {
        if (rep.tail.coords()[i] != rep.head.coords()[i]) left = true;
      }
      int f = left ? 0 : 1;
      std::size_t begin = f == 0 ? 0 : la;
      std::size_t end = f == 0 ? la : rep.tail.arity();
      VertexId t({rep.tail.coords().begin() + begin, rep.tail.coords().begin() + end});
      VertexId h2({rep.head.coords().begin() + begin, rep.head.coords().begin() + end});
      return json{{"factor", f},
                  {"hyperplane", hyperplane_to_json(x.factor(f), Hyperplane(OrientedEdge(t, h2)))}};
    }
  }
  throw Error(Errc::InternalError, "unknown backend");
}

namespace {

Automorphism parse_generator(const json& doc, const CubeComplex& x, const std::string& path) {
  if (!doc.is_object()) parse_fail(path, "expected an object");
  if (!doc.contains("kind")) parse_fail(path, "missing key 'kind'");
  std::string kind = expect_string(doc.at("kind"), path + ".kind");
  if (kind == "permutation") {
    if (x.kind() != CubeComplex::Kind::Finite) {
      parse_fail(path, "permutation generators need a finite complex");
    }
    expect_keys(doc, path, {"kind", "map"}, {});
    const json& jmap = doc.at("map");
    if (!jmap.is_object()) parse_fail(path + ".map", "expected an object");
    std::vector<std::int64_t> table(x.vertex_count(), -1);
    for (const auto& [from, to] : jmap.items()) {
      auto fv = x.vertex_by_name(from);
      if (!fv) parse_fail(path + ".map", "unknown vertex '" + from + "'");
      auto tv = x.vertex_by_name(expect_string(to, path + ".map." + from));
      if (!tv) parse_fail(path + ".map." + from, "unknown target vertex");
      table[fv->coords()[0]] = tv->coords()[0];
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] < 0) {
        parse_fail(path + ".map", "missing image for vertex '" +
                                      x.vertex_name(x.vertices()[i]) + "' (the map must be total)");
      }
    }
    try {
      return Automorphism::permutation(std::move(table));
    } catch (const Error& e) {
      parse_fail(path + ".map", e.what());
    }
  }
  if (kind == "affine") {
    if (x.kind() != CubeComplex::Kind::Lattice) {
      parse_fail(path, "affine generators need a lattice complex");
    }
    expect_keys(doc, path, {"kind", "signs", "perm", "translate"}, {});
    auto ints = [&](const char* key) {
      const json& arr = doc.at(key);
      const std::string apath = path + "." + key;
      if (!arr.is_array() || arr.size() != static_cast<std::size_t>(x.rank())) {
        parse_fail(apath, "expected an array of length " + std::to_string(x.rank()));
      }
      std::vector<std::int64_t> out;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        out.push_back(expect_int(arr[i], apath + "[" + std::to_string(i) + "]"));
      }
      return out;
    };
    auto signs64 = ints("signs");
    auto perm64 = ints("perm");
    auto translate = ints("translate");
    try {
      return Automorphism::affine(std::vector<int>(signs64.begin(), signs64.end()),
                                  std::vector<int>(perm64.begin(), perm64.end()),
                                  std::move(translate));
    } catch (const Error& e) {
      parse_fail(path, e.what());
    }
  }
  if (kind == "product") {
    if (x.kind() != CubeComplex::Kind::Product) {
      parse_fail(path, "product generators need a product complex");
    }
    expect_keys(doc, path, {"kind", "factors"}, {"swap"});
    const json& jf = doc.at("factors");
    if (!jf.is_array() || jf.size() != 2) parse_fail(path + ".factors", "expected [left, right]");
    bool swapped = false;
    if (doc.contains("swap")) {
      if (!doc.at("swap").is_boolean()) parse_fail(path + ".swap", "expected a boolean");
      swapped = doc.at("swap").get<bool>();
    }
    // With a swap the left map acts on factor 1 and vice versa.
    const CubeComplex& left_domain = swapped ? x.factor(1) : x.factor(0);
    const CubeComplex& right_domain = swapped ? x.factor(0) : x.factor(1);
    Automorphism left = parse_generator(jf[0], left_domain, path + ".factors[0]");
    Automorphism right = parse_generator(jf[1], right_domain, path + ".factors[1]");
    try {
      return Automorphism::product_pair(std::move(left), std::move(right), swapped);
    } catch (const Error& e) {
      parse_fail(path, e.what());
    }
  }
  parse_fail(path + ".kind", "unknown generator kind '" + kind + "'");
}

json serialize_generator(const CubeComplex& x, const Automorphism& g) {
  switch (g.kind()) {
    case Automorphism::Kind::Permutation: {
      json map = json::object();
      const auto& table = g.perm_table();
      for (std::size_t i = 0; i < table.size(); ++i) {
        map[x.vertex_name(x.vertices()[i])] = x.vertex_name(x.vertices()[table[i]]);
      }
      return json{{"kind", "permutation"}, {"map", std::move(map)}};
    }
    case Automorphism::Kind::Affine:
      return json{{"kind", "affine"},
                  {"signs", g.affine_signs()},
                  {"perm", g.affine_perm()},
                  {"translate", g.affine_translate()}};
    case Automorphism::Kind::Product: {
      const CubeComplex& left_domain = g.product_swapped() ? x.factor(1) : x.factor(0);
      const CubeComplex& right_domain = g.product_swapped() ? x.factor(0) : x.factor(1);
      json out{{"kind", "product"},
               {"factors", json::array({serialize_generator(left_domain, g.product_left()),
                                        serialize_generator(right_domain, g.product_right())})}};
      if (g.product_swapped()) out["swap"] = true;
      return out;
    }
  }
  throw Error(Errc::InternalError, "unknown automorphism kind");
}

}  // namespace

GroupAction parse_action(const json& doc, const CubeComplex& x) {
  expect_keys(doc, "$", {"generators", "base"}, {});
  const json& jgens = doc.at("generators");
  if (!jgens.is_object()) parse_fail("$.generators", "expected an object");
  std::vector<std::pair<std::string, Automorphism>> gens;
  for (const auto& [name, jg] : jgens.items()) {
    gens.emplace_back(name, parse_generator(jg, x, "$.generators." + name));
  }
  VertexId base = parse_vertex(doc.at("base"), x, "$.base");
  try {
    return GroupAction(x, std::move(gens), std::move(base));
  } catch (const Error& e) {
    if (e.code() == Errc::InvalidArguments) parse_fail("$", e.what());
    throw;
  }
}

json serialize_action(const GroupAction& a) {
  json gens = json::object();
  for (std::size_t i = 0; i < a.user_generator_count(); ++i) {
    const auto& g = a.generators()[i];
    gens[g.name] = serialize_generator(a.complex(), g.aut);
  }
  return json{{"generators", std::move(gens)},
              {"base", vertex_to_json(a.complex(), a.base())}};
}

json cube_to_json(const CubeComplex& x, const Cube& c) {
  json verts = json::array();
  for (const VertexId& v : c.vertices()) verts.push_back(vertex_to_json(x, v));
  return json{{"dimension", c.dimension()}, {"vertices", std::move(verts)}};
}

json certificate_to_json(const CubeComplex& x, const ClassifyResult& r) {
  if (const auto* e = std::get_if<EllipticCert>(&r)) {
    return json{{"type", "elliptic"}, {"cube", cube_to_json(x, e->cube)}};
  }
  if (const auto* h = std::get_if<HyperbolicCert>(&r)) {
    return json{{"type", "hyperbolic"},
                {"wall", hyperplane_to_json(x, h->wall)},
                {"triple", json::array({hyperplane_to_json(x, h->triple[0]),
                                        hyperplane_to_json(x, h->triple[1]),
                                        hyperplane_to_json(x, h->triple[2])})},
                {"power", h->power}};
  }
  const auto& u = std::get<UndecidedInfo>(r);
  return json{{"type", "undecided"},
              {"power_tried", u.power_tried},
              {"radius_tried", u.radius_tried},
              {"note", u.note}};
}

json outcome_to_json(const CubeComplex& x, const ResolutionOutcome& outcome) {
  if (const auto* fp = std::get_if<FixedPoint>(&outcome)) {
    return json{{"outcome", "fixed-point"}, {"cube", cube_to_json(x, fp->cube)}};
  }
  if (const auto* w = std::get_if<HyperbolicWitness>(&outcome)) {
    json tried = json::array();
    for (const Word& t : w->candidates_tried) tried.push_back(t);
    return json{{"outcome", "hyperbolic-witness"},
                {"word", w->word},
                {"certificate",
                 certificate_to_json(x, ClassifyResult(w->certificate))},
                {"candidates_tried", std::move(tried)}};
  }
  const auto& u = std::get<UndecidedReport>(outcome);
  json buckets = json::array();
  for (const auto& [base, size] : u.bucket_sizes) {
    buckets.push_back(json{{"base", hyperplane_to_json(x, base)}, {"size", size}});
  }
  json failed = json::array();
  for (const Word& w : u.failed_candidates) failed.push_back(w);
  json out{{"outcome", "undecided"}, {"reason", u.reason}, {"bucket_sizes", std::move(buckets)},
           {"failed_candidates", std::move(failed)}};
  if (u.far_word) out["far_word"] = *u.far_word;
  if (u.triple) {
    out["triple"] = json::array({hyperplane_to_json(x, (*u.triple)[0]),
                                 hyperplane_to_json(x, (*u.triple)[1]),
                                 hyperplane_to_json(x, (*u.triple)[2])});
  }
  return out;
}

std::string export_dot(const CubeComplex& x, const DotOverlays& overlays) {
  static const char* kPalette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e",
                                   "#e6ab02", "#a6761d", "#666666", "#386cb0", "#f0027f"};
  constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

  std::vector<Hyperplane> classes;
  if (overlays.hyperplanes) classes = all_hyperplanes(x);
  std::set<VertexId> orbit(overlays.orbit.begin(), overlays.orbit.end());

  std::string out = "graph complex {\n  node [shape=circle fontsize=10];\n";
  for (const VertexId& v : x.vertices()) {
    out += "  \"" + x.vertex_name(v) + "\"";
    std::vector<std::string> attrs;
    if (overlays.highlight_cube && overlays.highlight_cube->contains(v)) {
      attrs.push_back("style=filled fillcolor=\"#fdd49e\"");
    }
    if (orbit.count(v)) attrs.push_back("peripheries=2");
    if (!attrs.empty()) {
      out += " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (i) out += " ";
        out += attrs[i];
      }
      out += "]";
    }
    out += ";\n";
  }
  for (const OrientedEdge& e : x.edges()) {
    out += "  \"" + x.vertex_name(e.tail) + "\" -- \"" + x.vertex_name(e.head) + "\"";
    if (overlays.hyperplanes) {
      Hyperplane h = hyperplane_of(x, e);
      std::size_t index =
          std::lower_bound(classes.begin(), classes.end(), h) - classes.begin();
      out += " [color=\"" + std::string(kPalette[index % kPaletteSize]) + "\"]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ccx
