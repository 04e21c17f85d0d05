#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccx/action.hpp"
#include "ccx/complex.hpp"
#include "ccx/fixed_point.hpp"
#include "ccx/hyperplane.hpp"

namespace ccx {

using json = nlohmann::json;

/// Strict document parsing: unknown keys, wrong shapes and dangling
/// vertex references raise ParseError with a JSON-path-bearing message.
CubeComplex parse_complex(const json& doc, bool unchecked = false);
json serialize_complex(const CubeComplex& x);

/// Vertex encoding: finite = name string, lattice = coordinate array,
/// product = [left, right].
VertexId parse_vertex(const json& doc, const CubeComplex& x, const std::string& path = "$.vertex");
json vertex_to_json(const CubeComplex& x, const VertexId& v);

/// Hyperplane encoding: finite = representative edge ["a","b"], lattice
/// = {"axis":i,"wall":c}, product = {"factor":i,"hyperplane":...}.
Hyperplane parse_hyperplane(const json& doc, const CubeComplex& x,
                            const std::string& path = "$.hyperplane");
json hyperplane_to_json(const CubeComplex& x, const Hyperplane& h);

/// Action document: {"generators": {name: generator}, "base": vertex}.
/// Generator kinds: permutation (finite), affine (lattice), product.
GroupAction parse_action(const json& doc, const CubeComplex& x);
json serialize_action(const GroupAction& a);

json cube_to_json(const CubeComplex& x, const Cube& c);
json certificate_to_json(const CubeComplex& x, const ClassifyResult& r);
json outcome_to_json(const CubeComplex& x, const ResolutionOutcome& outcome);

struct DotOverlays {
  bool hyperplanes = false;
  std::optional<Cube> highlight_cube;
  std::vector<VertexId> orbit;
};

/// Deterministic DOT text for a finite complex; hyperplane overlay
/// colors edges by Θ-class.
std::string export_dot(const CubeComplex& x, const DotOverlays& overlays = {});

}  // namespace ccx
