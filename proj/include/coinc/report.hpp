#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coinc/symmetry.hpp"
#include "coinc/topology.hpp"

namespace coinc {

struct ReportOptions {
  std::uint64_t seed = 1;
  LatticeCaps lattice;
  HomologyCaps homology;
  GroupCaps group;
};

/// Summary of one (N, d, k) complement. Optional fields are filled only when
/// they apply to the defect codimension.
struct ReportDocument {
  int n = 0;
  int d = 0;
  int k = 0;
  int codim = 0;
  std::size_t atoms = 0;
  std::size_t lattice_nodes = 0;
  std::size_t lattice_edges = 0;
  std::vector<std::int64_t> characteristic_polynomial;

  std::optional<BigInt> regions;
  std::optional<std::size_t> sectors;
  std::optional<std::size_t> b1;
  std::vector<BettiContribution> contributions;
  std::optional<int> punctures;
  std::optional<int> free_rank;
  std::optional<bool> connected;
  std::optional<std::size_t> certificate_segments;
  std::optional<std::size_t> point_group_order;
  std::optional<std::string> point_group_name;
  std::vector<std::string> point_group_generators;
};

ReportDocument build_report(const ComplementSpec& spec, const ReportOptions& options = {});

/// Writes `value` under `key`, as a string plus a `<key>_as_string` marker
/// when it does not fit a signed 64-bit integer.
void put_integer(nlohmann::json& obj, const std::string& key, const BigInt& value);

nlohmann::json to_json(const ReportDocument& doc);
nlohmann::json lattice_json(const IntersectionLattice& l);
std::string lattice_dot(const IntersectionLattice& l);
nlohmann::json winding_json(const WindingVector& w, const Arrangement& a);

/// Serialized JSON with sorted keys and a trailing newline.
std::string dump_json(const nlohmann::json& j);

using Point3 = std::array<Scalar, 3>;

enum class MeshKind { polygon, segment, point };

struct MeshObject {
  std::string name;
  MeshKind kind;
  std::vector<Point3> vertices;
};

struct Mesh {
  int n = 0;
  int k = 0;
  Scalar box;
  std::vector<MeshObject> objects;
};

/// Atoms of the d = 1 arrangement clipped to the cube [-box, box]^3, for
/// N = 3 in full coordinates and N = 4 in coordinates of the relative space.
Mesh build_mesh(int n, int d, int k, const Scalar& box);
void write_obj(const Mesh& mesh, std::ostream& out);

}  // namespace coinc
